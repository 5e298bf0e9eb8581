#include "suppcode/pcm_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace suppcode {

std::string write_pcm(const Matrix& m) {
  const Field& f = *m.field();
  std::ostringstream out;
  if (f.prime_field())
    out << f.q() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  else
    out << f.p() << ' ' << f.e() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

Matrix read_pcm(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("empty pcm file");
  std::istringstream hs(header);
  std::vector<long long> fields;
  long long v;
  while (hs >> v) fields.push_back(v);
  FieldPtr field;
  int rows, cols;
  if (fields.size() == 3) {
    if (!is_prime(static_cast<int>(fields[0])))
      throw std::invalid_argument("three-token pcm header requires prime q; use 'p e m n'");
    field = Field::make(static_cast<int>(fields[0]), 1);
    rows = static_cast<int>(fields[1]);
    cols = static_cast<int>(fields[2]);
  } else if (fields.size() == 4) {
    field = Field::make(static_cast<int>(fields[0]), static_cast<int>(fields[1]));
    rows = static_cast<int>(fields[2]);
    cols = static_cast<int>(fields[3]);
  } else {
    throw std::invalid_argument("pcm header must be 'q m n' or 'p e m n'");
  }
  if (rows < 1 || cols < 1) throw std::invalid_argument("pcm dimensions must be positive");

  Matrix m(field, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      long long x;
      if (!(in >> x)) throw std::invalid_argument("pcm body shorter than header promises");
      if (x < 0 || x >= field->q())
        throw std::invalid_argument("pcm entry out of range at row " + std::to_string(i) +
                                    ", column " + std::to_string(j));
      m.set(i, j, static_cast<int>(x));
    }
  long long extra;
  if (in >> extra) throw std::invalid_argument("pcm body longer than header promises");
  return m;
}

Matrix read_pcm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open pcm file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_pcm(buf.str());
}

void write_pcm_file(const Matrix& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write pcm file: " + path);
  out << write_pcm(m);
}

uint64_t fnv1a64(std::string_view data) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view data) {
  static const char* digits = "0123456789abcdef";
  uint64_t h = fnv1a64(data);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace suppcode
