#pragma once

#include <cstdio>
#include <string>

namespace levystore {

// Fixed 12-significant-digit formatting for all CSV output, so repeated runs
// produce byte-identical files.
inline std::string csv_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace levystore
