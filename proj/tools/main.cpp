#include <cstdio>

int main() {
  std::puts("stripdef: command-line interface under construction");
  return 0;
}
