#include <exception>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  (void)args;
  std::cerr << "CLI not wired yet\n";
  return 64;
}
