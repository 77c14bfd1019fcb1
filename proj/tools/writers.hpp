#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cli {

std::string num(double v);

// CSV with a "# key=value" header block.
class Csv {
 public:
  Csv& meta(const std::string& key, const std::string& value);
  Csv& columns(std::vector<std::string> names);
  Csv& row(const std::vector<std::string>& cells);
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> meta_;
  std::vector<std::string> cols_;
  std::vector<std::vector<std::string>> rows_;
};

// Row-major n x n layer, row 0 at y = -extent. Images are written with +y up.
struct Layer {
  int n = 0;
  std::vector<double> values;  // NaN pixels are written as 0
  double lo = 0.0, hi = 1.0;   // value range mapped onto the full grey scale
};

std::string pgm16(const Layer& layer, const std::string& comment);
std::string png_rgb(const Layer& layer, const std::string& colormap);

// Files are staged in memory and written in filename order once everything is computed.
using FileSet = std::map<std::string, std::string>;

// Throws ConfigError when the directory cannot be created or written.
void ensure_writable_dir(const std::string& dir);
void write_files(const std::string& dir, const FileSet& files);

std::string utc_timestamp();

}  // namespace cli
