// Placeholder main; the CLI is assembled once the engine modules are in.
int main() { return 0; }
