#pragma once

#include <iosfwd>
#include <string>

#include "tradekit/linalg.hpp"

namespace tradekit {

/// `p/q` with `/q` dropped when q = 1; the sign sits on the numerator.
std::string format_rational(const Rational& x);
/// Accepts `p`, `-p`, `p/q`; result is canonical. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Dense text form: `rows cols` then one line per row.
void write_dense(std::ostream& os, const RationalMatrix& m);
/// Sparse text form: `rows cols nnz` then `i j value` lines, 1-based,
/// in row-major order.
void write_sparse(std::ostream& os, const RationalMatrix& m);

/// Reads either form; the header's token count selects the layout.
RationalMatrix read_matrix(std::istream& is);

}  // namespace tradekit
