namespace stripdef {
}  // namespace stripdef
