#include <algorithm>

#include "jetbound/errors.hpp"
#include "jetbound/morse.hpp"

namespace jetbound {

namespace {

using Rational = mpq_class;
using Dense = std::vector<Rational>;  // ascending coefficients, no trailing zeros

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const EvaluatedClass& p) {
  Dense out;
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  trim(out);
  return out;
}

Dense derivative(const Dense& p) {
  Dense out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<unsigned long>(i));
  trim(out);
  return out;
}

Dense remainder(Dense num, const Dense& den) {
  while (num.size() >= den.size()) {
    const Rational factor = num.back() / den.back();
    const std::size_t shift = num.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
    num.pop_back();
    trim(num);
  }
  return num;
}

int sign_at(const Dense& p, const Integer& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return sgn(acc);
}

class SturmSequence {
 public:
  explicit SturmSequence(const Dense& p) {
    if (p.empty()) return;
    seq_.push_back(p);
    Dense next = derivative(p);
    while (!next.empty()) {
      seq_.push_back(next);
      Dense rem = remainder(seq_[seq_.size() - 2], seq_.back());
      for (auto& c : rem) c = -c;
      next = std::move(rem);
    }
  }

  int variations(const Integer& x) const {
    int count = 0;
    int last = 0;
    for (const auto& s : seq_) {
      const int sg = sign_at(s, x);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  }

 private:
  std::vector<Dense> seq_;
};

// Largest integer x in [lo, hi] with P(x) <= 0.
std::optional<Integer> last_nonpositive(const Dense& p, const SturmSequence& sturm, const Integer& lo,
                                        const Integer& hi) {
  if (sign_at(p, hi) <= 0) return hi;
  if (lo == hi) return std::nullopt;
  if (sign_at(p, lo) > 0 && sturm.variations(lo) == sturm.variations(hi)) return std::nullopt;
  const Integer mid = (lo + hi) / 2;
  if (auto found = last_nonpositive(p, sturm, mid + 1, hi)) return found;
  return last_nonpositive(p, sturm, lo, mid);
}

}  // namespace

Integer cauchy_bound(const EvaluatedClass& p) {
  const auto coeffs = p.coefficients();
  if (coeffs.empty()) throw InputError("Cauchy bound of the zero polynomial");
  const Integer lead = abs(coeffs.back());
  Integer biggest = 0;
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) biggest = std::max(biggest, Integer(abs(coeffs[i])));
  Integer ratio;
  mpz_cdiv_q(ratio.get_mpz_t(), biggest.get_mpz_t(), lead.get_mpz_t());
  return ratio + 1;
}

std::size_t count_real_roots(const EvaluatedClass& p, const Integer& lo, const Integer& hi) {
  const Dense dense = to_dense(p);
  if (dense.empty()) throw InputError("root count of the zero polynomial");
  if (sign_at(dense, lo) == 0 || sign_at(dense, hi) == 0) throw InputError("interval endpoint is a root");
  if (lo >= hi) return 0;
  const SturmSequence sturm(dense);
  return static_cast<std::size_t>(sturm.variations(lo) - sturm.variations(hi));
}

std::optional<Integer> degree_threshold(const EvaluatedClass& p) {
  if (p.leading_coefficient() <= 0) return std::nullopt;
  const Dense dense = to_dense(p);
  const SturmSequence sturm(dense);
  const auto last = last_nonpositive(dense, sturm, 1, cauchy_bound(p));
  return last ? Integer(*last + 1) : Integer(1);
}

}  // namespace jetbound
