#include "starconf/resolution.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "starconf/combinatorics.hpp"
#include "starconf/errors.hpp"
#include "starconf/star.hpp"

namespace starconf {

// --- SparsePoly -----------------------------------------------------------

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ResourceError("integer coefficient overflow", INT64_MAX);
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("integer coefficient overflow", INT64_MAX);
  return out;
}

}  // namespace

SparsePoly::SparsePoly(std::size_t arity) : arity_(arity) {}

SparsePoly SparsePoly::monomial(std::int64_t coefficient, const ExponentTuple& t) {
  SparsePoly p(t.arity());
  p.add_term(t, coefficient);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t arity, std::size_t var) {
  return monomial(1, ExponentTuple::unit_vector(arity, var));
}

void SparsePoly::add_term(const ExponentTuple& t, std::int64_t coefficient) {
  if (t.arity() != arity_) throw UsageError("SparsePoly: arity mismatch");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(t, coefficient);
  if (!inserted) {
    it->second = checked_add(it->second, coefficient);
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::pair<int, ExponentTuple>> SparsePoly::as_signed_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [t, coef] = *terms_.begin();
  if (coef != 1 && coef != -1) return std::nullopt;
  return std::make_pair(static_cast<int>(coef), t);
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  if (other.arity_ != arity_) throw UsageError("SparsePoly: arity mismatch");
  for (const auto& [t, c] : other.terms_) add_term(t, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  if (other.arity_ != arity_) throw UsageError("SparsePoly: arity mismatch");
  for (const auto& [t, c] : other.terms_) add_term(t, checked_mul(c, -1));
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.arity_ != b.arity_) throw UsageError("SparsePoly: arity mismatch");
  SparsePoly out(a.arity_);
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) out.add_term(product(ta, tb), checked_mul(ca, cb));
  }
  return out;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out(arity_);
  for (const auto& [t, c] : terms_) out.terms_.emplace(t, checked_mul(c, -1));
  return out;
}

std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<ExponentTuple, std::int64_t>> terms(p.terms().begin(), p.terms().end());
  // higher degree first; canonical order within a degree
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return grlex_less(a.first, b.first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms) {
    const bool constant = t.degree() == 0;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (constant) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << to_string(t);
    }
  }
  return os.str();
}

// --- SymbolicMatrix -------------------------------------------------------

SymbolicMatrix::SymbolicMatrix(std::size_t rows, std::size_t cols, std::size_t arity)
    : rows_(rows), cols_(cols), arity_(arity), entries_(rows * cols, SparsePoly(arity)) {}

// --- Betti numbers ----------------------------------------------------------

std::int64_t en_rank(int s, int c, int i) {
  if (s < 1 || c < 1 || c > s) throw UsageError("en_rank: need 1 <= c <= s");
  if (i < 1 || i > c) throw UsageError("en_rank: homological index must satisfy 1 <= i <= c");
  return binomial(s, s - c + i) * binomial(s - c + i - 1, i - 1);
}

ResolutionShape en_resolution(int s, int c) {
  ResolutionShape shape;
  for (int i = 1; i <= c; ++i) shape.modules.push_back({{-(s - c + i), en_rank(s, c, i)}});
  return shape;
}

namespace {

void check_ss(int s, int c) {
  if (c < 2 || c > s - 1) throw UsageError("symbolic-square resolution needs 2 <= c <= s-1");
}

void normalize(ResolutionShape& shape) {
  for (auto& mod : shape.modules) {
    std::map<int, std::int64_t, std::greater<>> merged;
    for (const auto& [twist, rank] : mod) merged[twist] += rank;
    mod.clear();
    for (const auto& [twist, rank] : merged) {
      if (rank != 0) mod.emplace_back(twist, rank);
    }
  }
}

}  // namespace

ResolutionShape ss_resolution(int s, int c) {
  check_ss(s, c);
  ResolutionShape shape;
  for (int i = 1; i <= c; ++i) {
    const std::int64_t m_i =
        i == 1 ? binomial(s, s - c + 1)
               : binomial(s, s - c + i) * binomial(s - c + i - 1, i - 1) +
                     binomial(s, s - c + i) * binomial(s - c + i - 1, i - 2);
    const std::int64_t n_i = i <= c - 1 ? binomial(s, s - c + 1 + i) * binomial(s - c + i, i - 1) : 0;
    shape.modules.push_back({{-(s - c + 1 + i), n_i}, {-(2 * s - 2 * c + 1 + i), m_i}});
  }
  normalize(shape);
  return shape;
}

ResolutionShape ss_mapping_cone(int s, int c) {
  check_ss(s, c);
  const int shift = s - c + 1;
  ResolutionShape shape;
  for (int i = 1; i <= c; ++i) {
    std::vector<std::pair<int, std::int64_t>> mod;
    mod.emplace_back(-(s - c + i) - shift, en_rank(s, c, i));
    if (i >= 2) mod.emplace_back(-(s - (c - 1) + (i - 1)) - shift, en_rank(s, c - 1, i - 1));
    if (i <= c - 1) mod.emplace_back(-(s - (c - 1) + i), en_rank(s, c - 1, i));
    shape.modules.push_back(std::move(mod));
  }
  normalize(shape);
  return shape;
}

IntPoly shape_numerator(const ResolutionShape& shape) {
  IntPoly k{1};
  for (std::size_t idx = 0; idx < shape.modules.size(); ++idx) {
    const std::int64_t sign = (idx % 2 == 0) ? -1 : 1;  // F_1 enters with a minus sign
    for (const auto& [twist, rank] : shape.modules[idx]) {
      if (twist > 0) throw UsageError("shape_numerator: positive twist");
      const auto deg = static_cast<std::size_t>(-twist);
      if (k.size() <= deg) k.resize(deg + 1, 0);
      k[deg] += sign * rank;
    }
  }
  while (!k.empty() && k.back() == 0) k.pop_back();
  return k;
}

bool euler_check(const ResolutionShape& shape, const MonomialIdeal& ideal, int degree_cap) {
  const int cap = degree_cap > 0 ? degree_cap : default_degree_cap(ideal);
  return shape_numerator(shape) == series_numerator(ideal, cap);
}

// --- Hilbert-Burch matrices -----------------------------------------------

namespace {

ExponentTuple p_power_times_pi(int s, int p_exp, int i, int pi_exp) {
  // P^{p_exp} * P_i^{pi_exp}, P = x_0...x_{s-1}, P_i = P / x_i
  std::vector<Exponent> e(static_cast<std::size_t>(s), p_exp + pi_exp);
  if (i >= 0) e[static_cast<std::size_t>(i)] = p_exp;
  return ExponentTuple(std::move(e));
}

}  // namespace

SymbolicMatrix hb_matrix(int s, int m) {
  if (s < 2) throw UsageError("hb_matrix: s must be >= 2");
  if (m < 2) throw UsageError("hb_matrix: m must be >= 2 (m = 1 is the skeleton itself)");
  const std::size_t n = static_cast<std::size_t>(s);
  const std::size_t r = static_cast<std::size_t>(m / 2);
  auto h = [&](std::size_t i) { return SparsePoly::variable(n, i); };
  auto minus_pi = [&](std::size_t i) {
    return SparsePoly::monomial(-1, p_power_times_pi(s, 0, static_cast<int>(i), 1));
  };

  if (m % 2 == 0) {
    SymbolicMatrix mat(n * r + 1, n * r, n);
    for (std::size_t j = 0; j < n; ++j) mat(0, j) = minus_pi(j);  // B
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t row = 1 + k * n + i;
        mat(row, k * n + i) = h(i);                              // C
        if (k + 1 < r) mat(row, (k + 1) * n + i) = minus_pi(i);  // E
      }
    }
    return mat;
  }

  SymbolicMatrix mat(n * (r + 1), n * (r + 1) - 1, n);
  for (std::size_t j = 0; j + 1 < n; ++j) {  // D
    mat(j, j) = -h(j);
    mat(j + 1, j) = h(j + 1);
  }
  auto block_col = [&](std::size_t k) { return (n - 1) + (k - 1) * n; };  // k >= 1
  if (r >= 1) {
    for (std::size_t i = 0; i < n; ++i) mat(i, block_col(1) + i) = minus_pi(i);
  }
  for (std::size_t k = 1; k <= r; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t row = k * n + i;
      mat(row, block_col(k) + i) = h(i);
      if (k < r) mat(row, block_col(k + 1) + i) = minus_pi(i);
    }
  }
  return mat;
}

namespace {

class CofactorExpansion {
 public:
  explicit CofactorExpansion(const SymbolicMatrix& m) : m_(m) {}

  SparsePoly det(std::uint32_t rows, std::uint32_t cols) {
    if (rows == 0) return SparsePoly::monomial(1, ExponentTuple(m_.arity()));
    const std::uint64_t key = (std::uint64_t{rows} << 32) | cols;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // sparsest remaining row or column
    int best_line = -1;
    bool best_is_row = true;
    int best_count = INT32_MAX;
    for (std::uint32_t rs = rows; rs != 0; rs &= rs - 1) {
      const int r = std::countr_zero(rs);
      int count = 0;
      for (std::uint32_t cs = cols; cs != 0; cs &= cs - 1) count += !m_(r, std::countr_zero(cs)).is_zero();
      if (count < best_count) best_count = count, best_line = r, best_is_row = true;
    }
    for (std::uint32_t cs = cols; cs != 0; cs &= cs - 1) {
      const int c = std::countr_zero(cs);
      int count = 0;
      for (std::uint32_t rs = rows; rs != 0; rs &= rs - 1) count += !m_(std::countr_zero(rs), c).is_zero();
      if (count < best_count) best_count = count, best_line = c, best_is_row = false;
    }

    SparsePoly result(m_.arity());
    const std::uint32_t fixed_bit = std::uint32_t{1} << best_line;
    const std::uint32_t others = best_is_row ? cols : rows;
    const int fixed_pos = std::popcount((best_is_row ? rows : cols) & (fixed_bit - 1));
    for (std::uint32_t os = others; os != 0; os &= os - 1) {
      const int other = std::countr_zero(os);
      const std::uint32_t other_bit = std::uint32_t{1} << other;
      const SparsePoly& entry = best_is_row ? m_(best_line, other) : m_(other, best_line);
      if (entry.is_zero()) continue;
      const int other_pos = std::popcount(others & (other_bit - 1));
      const SparsePoly sub = best_is_row ? det(rows & ~fixed_bit, cols & ~other_bit)
                                         : det(rows & ~other_bit, cols & ~fixed_bit);
      if (sub.is_zero()) continue;
      if ((fixed_pos + other_pos) % 2 == 0) {
        result += entry * sub;
      } else {
        result -= entry * sub;
      }
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  const SymbolicMatrix& m_;
  std::unordered_map<std::uint64_t, SparsePoly> memo_;
};

std::uint32_t low_bits(std::size_t n) { return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1; }

}  // namespace

SparsePoly determinant(const SymbolicMatrix& m, int max_dim) {
  if (m.rows() != m.cols()) throw UsageError("determinant: matrix must be square");
  if (m.rows() > static_cast<std::size_t>(max_dim)) {
    throw ResourceError("determinant: matrix dimension " + std::to_string(m.rows()) + " exceeds cap", max_dim);
  }
  CofactorExpansion engine(m);
  return engine.det(low_bits(m.rows()), low_bits(m.cols()));
}

std::vector<SparsePoly> maximal_minors(const SymbolicMatrix& m, int max_dim) {
  if (m.rows() != m.cols() + 1) throw UsageError("maximal_minors: expected rows == cols + 1");
  if (m.cols() > static_cast<std::size_t>(max_dim)) {
    throw ResourceError("maximal_minors: minor dimension " + std::to_string(m.cols()) + " exceeds cap", max_dim);
  }
  CofactorExpansion engine(m);  // shared memo across all deleted rows
  std::vector<SparsePoly> minors;
  const std::uint32_t all_rows = low_bits(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    minors.push_back(engine.det(all_rows & ~(std::uint32_t{1} << r), low_bits(m.cols())));
  }
  return minors;
}

std::vector<ExponentTuple> predicted_minor_family(int s, int m) {
  if (s < 2 || m < 2) throw UsageError("predicted_minor_family: need s >= 2, m >= 2");
  const int r = m / 2;
  std::vector<ExponentTuple> family;
  if (m % 2 == 0) {
    family.push_back(p_power_times_pi(s, r, -1, 0));
    for (int k = 1; k <= r; ++k) {
      for (int i = 0; i < s; ++i) family.push_back(p_power_times_pi(s, r - k, i, 2 * k));
    }
  } else {
    for (int k = 0; k <= r; ++k) {
      for (int i = 0; i < s; ++i) family.push_back(p_power_times_pi(s, r - k, i, 2 * k + 1));
    }
  }
  std::sort(family.begin(), family.end(), grlex_less);
  return family;
}

HbReport verify_hb(int s, int m, const Caps& caps) {
  const StarConfig cfg = StarConfig::make(s, 2);
  const SymbolicMatrix mat = hb_matrix(s, m);
  HbReport report;
  report.s = s;
  report.m = m;
  report.rows = mat.rows();
  report.cols = mat.cols();
  report.minors = maximal_minors(mat, caps.determinant_dim);

  std::vector<ExponentTuple> observed;
  report.all_signed_monomials = true;
  for (std::size_t row = 0; row < report.minors.size(); ++row) {
    const auto signed_mono = report.minors[row].as_signed_monomial();
    if (!signed_mono) {
      report.all_signed_monomials = false;
      if (report.failure.empty()) {
        report.failure = "minor deleting row " + std::to_string(row) +
                         " is not a signed monomial: " + to_string(report.minors[row]);
      }
      continue;
    }
    observed.push_back(signed_mono->second);
  }

  std::vector<ExponentTuple> observed_set = observed;
  std::sort(observed_set.begin(), observed_set.end(), grlex_less);
  observed_set.erase(std::unique(observed_set.begin(), observed_set.end()), observed_set.end());
  auto predicted = predicted_minor_family(s, m);
  predicted.erase(std::unique(predicted.begin(), predicted.end()), predicted.end());
  report.family_match = report.all_signed_monomials && observed_set == predicted;
  if (!report.family_match && report.failure.empty()) {
    report.failure = "minor monomials differ from the predicted family";
  }

  const MonomialIdeal minor_ideal = minimalize(static_cast<std::size_t>(s), observed);
  report.ideal_match = report.all_signed_monomials && equals(minor_ideal, symbolic_power(cfg, m, caps));
  if (!report.ideal_match && report.failure.empty()) {
    report.failure = "ideal of maximal minors differs from the symbolic power";
  }
  return report;
}

}  // namespace starconf
