#include <fstream>
#include <sstream>

#include "lsap/core.hpp"

namespace lsap {
namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  if (sep == ' ') {
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
  }
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\t' && c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::int64_t parse_int(const std::string& tok) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParse, "not an integer: '" + tok + "'");
  }
  if (used != tok.size()) throw Error(ErrorCode::kParse, "not an integer: '" + tok + "'");
  return value;
}

}  // namespace

WeightMatrix read_matrix(std::istream& in) {
  std::string header;
  while (std::getline(in, header)) {
    if (header.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  if (!in && header.empty()) throw Error(ErrorCode::kParse, "empty matrix file");
  const char sep = header.find(',') != std::string::npos ? ',' : ' ';
  auto fields = split(header, sep);
  if (fields.size() != 3) {
    throw Error(ErrorCode::kParse, "header must be 'rows cols sense'");
  }
  const auto rows = parse_int(fields[0]);
  const auto cols = parse_int(fields[1]);
  if (rows < 1 || cols < 1) throw Error(ErrorCode::kParse, "rows and cols must be positive");
  WeightMatrix w(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                 parse_sense(fields[2]));

  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(rows * cols));
  std::string line;
  while (std::getline(in, line)) {
    for (const auto& tok : split(line, sep)) {
      if (tok.empty()) {
        if (sep == ',') throw Error(ErrorCode::kParse, "empty CSV field");
        continue;
      }
      values.push_back(parse_int(tok));
    }
  }
  if (values.size() != static_cast<std::size_t>(rows * cols)) {
    throw Error(ErrorCode::kParse, "expected " + std::to_string(rows * cols) +
                                       " entries, found " + std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) w.at(i, j) = values[i * w.cols() + j];
  }
  // Widen the bit length to cover the file's contents.
  int bits = kDefaultBitLength;
  while (!w.fits(bits) && bits < 62) ++bits;
  w.set_bit_length(bits);
  w.validate();
  return w;
}

WeightMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const WeightMatrix& w) {
  out << w.rows() << ' ' << w.cols() << ' ' << to_string(w.sense()) << '\n';
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (j) out << ' ';
      out << w(i, j);
    }
    out << '\n';
  }
}

std::string format_matrix(const WeightMatrix& w) {
  std::ostringstream out;
  write_matrix(out, w);
  return out.str();
}

void write_matrix_csv(std::ostream& out, const WeightMatrix& w) {
  out << w.rows() << ',' << w.cols() << ',' << to_string(w.sense()) << '\n';
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (j) out << ',';
      out << w(i, j);
    }
    out << '\n';
  }
}

}  // namespace lsap
