// placeholder during bring-up
int main() { return 0; }
