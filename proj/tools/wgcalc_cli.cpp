// placeholder; the real CLI is implemented once the library is complete
int main() { return 0; }
