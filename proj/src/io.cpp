#include "ennomp/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace ennomp {

namespace {

constexpr char kMagic[4] = {'E', 'N', 'N', '1'};

static_assert(std::numeric_limits<double>::is_iec559, "IEEE-754 doubles required");

void put_u32_le(std::ostream& os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

bool get_u32_le(std::istream& is, std::uint32_t& v) {
  unsigned char b[4];
  if (!is.read(reinterpret_cast<char*>(b), 4)) return false;
  v = static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
      (static_cast<std::uint32_t>(b[2]) << 16) |
      (static_cast<std::uint32_t>(b[3]) << 24);
  return true;
}

void put_f64_le(std::ostream& os, double d) {
  std::uint64_t bits;
  std::memcpy(&bits, &d, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 8);
}

bool get_f64_le(std::istream& is, double& d) {
  unsigned char b[8];
  if (!is.read(reinterpret_cast<char*>(b), 8)) return false;
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  std::memcpy(&d, &bits, 8);
  return true;
}

bool has_csv_extension(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

}  // namespace

void write_enn1(const std::string& path, const Matrix& m) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  os.write(kMagic, 4);
  put_u32_le(os, static_cast<std::uint32_t>(m.rows()));
  put_u32_le(os, static_cast<std::uint32_t>(m.cols()));
  for (Index c = 0; c < m.cols(); ++c) {
    for (Index r = 0; r < m.rows(); ++r) put_f64_le(os, m(r, c));
  }
  if (!os) throw IoError("write failed: " + path);
}

Matrix read_enn1(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open: " + path);
  char magic[4];
  if (!is.read(magic, 4)) throw TruncatedFile("missing header: " + path);
  if (std::memcmp(magic, kMagic, 4) != 0) throw BadMagic("not an ENN1 file: " + path);
  std::uint32_t rows = 0, cols = 0;
  if (!get_u32_le(is, rows) || !get_u32_le(is, cols)) {
    throw TruncatedFile("truncated header: " + path);
  }
  if (rows == 0 || cols == 0) throw DimensionZero("zero dimension in: " + path);
  Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (Index c = 0; c < m.cols(); ++c) {
    for (Index r = 0; r < m.rows(); ++r) {
      if (!get_f64_le(is, m(r, c))) throw TruncatedFile("truncated data: " + path);
    }
  }
  return m;
}

void write_matrix_csv(const std::string& path, const Matrix& m) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open for writing: " + path);
  char buf[64];
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", m(r, c));
      if (c) os << ',';
      os << buf;
    }
    os << '\n';
  }
  if (!os) throw IoError("write failed: " + path);
}

Matrix read_matrix_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t next = line.find(',', pos);
      if (next == std::string::npos) next = line.size();
      const std::string field = line.substr(pos, next - pos);
      char* end = nullptr;
      const double v = std::strtod(field.c_str(), &end);
      if (end == field.c_str()) {
        throw IoError("unparseable CSV field '" + field + "' in: " + path);
      }
      row.push_back(v);
      pos = next + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw IoError("ragged CSV rows in: " + path);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DimensionZero("empty CSV: " + path);
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
  }
  return m;
}

Matrix read_matrix(const std::string& path) {
  return has_csv_extension(path) ? read_matrix_csv(path) : read_enn1(path);
}

void write_matrix(const std::string& path, const Matrix& m) {
  if (has_csv_extension(path)) {
    write_matrix_csv(path, m);
  } else {
    write_enn1(path, m);
  }
}

Vector read_vector(const std::string& path) {
  const Matrix m = read_matrix(path);
  if (m.cols() == 1) return m.col(0);
  if (m.rows() == 1) return m.row(0).transpose();
  throw ValidationError("expected a vector (r-by-1 or 1-by-c) in: " + path);
}

void write_delta_sidecar(const std::string& embed_path, double delta) {
  const std::string path = embed_path + ".delta";
  std::ofstream os(path);
  if (!os) throw IoError("cannot open for writing: " + path);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", delta);
  os << buf << '\n';
  if (!os) throw IoError("write failed: " + path);
}

double read_delta_sidecar(const std::string& embed_path) {
  const std::string path = embed_path + ".delta";
  std::ifstream is(path);
  if (!is) throw IoError("cannot open: " + path);
  double v = 0.0;
  if (!(is >> v)) throw IoError("unparseable delta sidecar: " + path);
  return v;
}

}  // namespace ennomp
