#include "tgftflow/output.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#ifndef TGFTFLOW_BUILD_ID
#define TGFTFLOW_BUILD_ID "unknown"
#endif

namespace tgftflow {

const char* build_id() { return TGFTFLOW_BUILD_ID; }

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << contents;
  out.flush();
  if (!out) {
    out.close();
    std::remove(path.c_str());
    throw std::runtime_error("write failed, partial file removed: " + path);
  }
}

}  // namespace tgftflow
