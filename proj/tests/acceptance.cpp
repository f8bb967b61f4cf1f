#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240611;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      only.push_back(std::atoi(arg.c_str()));
    }
  }
  bool all = true;
  for (const auto& c : hc::verify::criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto r = c.run(seed);
    std::cout << hc::verify::format_line(r) << "  [" << static_cast<int>(r.seconds * 1000) << " ms]" << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
