#include "writers.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "mwvortex/errors.hpp"

namespace cli {

namespace fs = std::filesystem;

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

namespace {
std::string cell(const std::string& s) {
  if (s.find_first_of(",\"\n ") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}
}  // namespace

Csv& Csv::meta(const std::string& key, const std::string& value) {
  meta_.emplace_back(key, value);
  return *this;
}

Csv& Csv::columns(std::vector<std::string> names) {
  cols_ = std::move(names);
  return *this;
}

Csv& Csv::row(const std::vector<std::string>& cells) {
  if (cells.size() != cols_.size()) throw std::logic_error("csv row width does not match header");
  rows_.push_back(cells);
  return *this;
}

std::string Csv::str() const {
  std::string out;
  for (const auto& [k, v] : meta_) out += "# " + k + "=" + v + "\n";
  auto line = [&](const std::vector<std::string>& r) {
    for (size_t k = 0; k < r.size(); ++k) out += (k ? "," : "") + cell(r[k]);
    out += "\n";
  };
  line(cols_);
  for (const auto& r : rows_) line(r);
  return out;
}

namespace {

double unit(const Layer& l, double v) {
  if (std::isnan(v) || !(l.hi > l.lo)) return 0.0;
  return std::clamp((v - l.lo) / (l.hi - l.lo), 0.0, 1.0);
}

// dark red through orange to pale yellow
constexpr std::array<std::array<double, 3>, 5> kHeat{{
    {0.0, 0.0, 0.0}, {0.5, 0.0, 0.1}, {0.9, 0.3, 0.0}, {1.0, 0.75, 0.1}, {1.0, 1.0, 0.85}}};

std::array<unsigned char, 3> colour(double t, const std::string& map) {
  if (map == "gray") {
    const auto g = static_cast<unsigned char>(std::lround(255.0 * t));
    return {g, g, g};
  }
  const double x = t * (kHeat.size() - 1);
  const size_t k = std::min<size_t>(static_cast<size_t>(x), kHeat.size() - 2);
  const double f = x - k;
  std::array<unsigned char, 3> c;
  for (int i = 0; i < 3; ++i)
    c[i] = static_cast<unsigned char>(std::lround(255.0 * ((1 - f) * kHeat[k][i] + f * kHeat[k + 1][i])));
  return c;
}

void png_append(png_structp png, png_bytep data, png_size_t len) {
  auto* out = static_cast<std::string*>(png_get_io_ptr(png));
  out->append(reinterpret_cast<const char*>(data), len);
}

}  // namespace

std::string pgm16(const Layer& l, const std::string& comment) {
  std::string out = "P5\n# " + comment + "\n" + std::to_string(l.n) + " " + std::to_string(l.n) + "\n65535\n";
  out.reserve(out.size() + 2 * l.values.size());
  for (int row = l.n - 1; row >= 0; --row)
    for (int col = 0; col < l.n; ++col) {
      const auto v = static_cast<unsigned>(std::lround(65535.0 * unit(l, l.values[static_cast<size_t>(row) * l.n + col])));
      out += static_cast<char>(v >> 8);
      out += static_cast<char>(v & 0xff);
    }
  return out;
}

std::string png_rgb(const Layer& l, const std::string& colormap) {
  std::string out;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("libpng initialisation failed");
  }
  std::vector<unsigned char> row(3 * static_cast<size_t>(l.n));
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("libpng failed while encoding");
  }
  png_set_write_fn(png, &out, png_append, nullptr);
  png_set_IHDR(png, info, l.n, l.n, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int r = l.n - 1; r >= 0; --r) {
    for (int col = 0; col < l.n; ++col) {
      const auto c = colour(unit(l, l.values[static_cast<size_t>(r) * l.n + col]), colormap);
      std::copy(c.begin(), c.end(), row.begin() + 3 * col);
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

void ensure_writable_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw mwvortex::ConfigError("output directory '" + dir + "' cannot be created");
  const fs::path probe = fs::path(dir) / ".mwvortex_write_probe";
  {
    std::ofstream f(probe);
    if (!f) throw mwvortex::ConfigError("output directory '" + dir + "' is not writable");
  }
  fs::remove(probe, ec);
}

void write_files(const std::string& dir, const FileSet& files) {
  for (const auto& [name, bytes] : files) {
    const fs::path p = fs::path(dir) / name;
    std::ofstream f(p, std::ios::binary);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::runtime_error("failed writing " + p.string());
  }
}

std::string utc_timestamp() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace cli
