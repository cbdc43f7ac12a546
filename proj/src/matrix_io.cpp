#include "tradekit/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tradekit {

std::string format_rational(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  const auto bad = [&] { return std::invalid_argument("malformed rational '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

void write_dense(std::ostream& os, const RationalMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << format_rational(m(i, j));
    }
    os << '\n';
  }
}

void write_sparse(std::ostream& os, const RationalMatrix& m) {
  std::size_t nnz = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) nnz += m(i, j) != 0;
  os << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) os << i + 1 << ' ' << j + 1 << ' ' << format_rational(m(i, j)) << '\n';
}

RationalMatrix read_matrix(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::invalid_argument("matrix input is empty");
  std::istringstream hs(header);
  std::vector<long long> fields;
  for (long long x; hs >> x;) fields.push_back(x);
  if (!hs.eof() || fields.size() < 2 || fields.size() > 3)
    throw std::invalid_argument("matrix header must be 'rows cols' or 'rows cols nnz'");
  for (auto f : fields)
    if (f < 0) throw std::invalid_argument("negative size in matrix header");
  RationalMatrix m(fields[0], fields[1]);
  std::string tok;
  if (fields.size() == 2) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!(is >> tok)) throw std::invalid_argument("dense matrix truncated");
        m(i, j) = parse_rational(tok);
      }
  } else {
    for (long long e = 0; e < fields[2]; ++e) {
      long long i = 0, j = 0;
      if (!(is >> i >> j >> tok)) throw std::invalid_argument("sparse matrix truncated");
      if (i < 1 || j < 1 || i > fields[0] || j > fields[1])
        throw std::invalid_argument("sparse index out of range");
      m(i - 1, j - 1) = parse_rational(tok);
    }
  }
  if (is >> tok) throw std::invalid_argument("trailing data after matrix");
  return m;
}

}  // namespace tradekit
