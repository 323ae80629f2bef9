#include "rforest/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

#include "rforest/errors.hpp"

namespace rforest {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "ParseError";
    case Errc::non_rational_value: return "NonRationalValue";
    case Errc::metric_axiom_violation: return "MetricAxiomViolation";
    case Errc::single_point_space: return "SinglePointSpace";
    case Errc::lipschitz_violation: return "LipschitzViolation";
    case Errc::missing_zero_breakpoint: return "MissingZeroBreakpoint";
    case Errc::label_on_supremum: return "LabelOnSupremum";
    case Errc::mixed_components: return "MixedComponents";
    case Errc::root_mismatch: return "RootMismatch";
    case Errc::separation_impossible: return "SeparationImpossible";
    case Errc::empty_choice: return "EmptyChoice";
    case Errc::different_components: return "DifferentComponents";
    case Errc::bad_truncation: return "BadTruncation";
    case Errc::disconnected_interval: return "DisconnectedInterval";
    case Errc::duplicate_component_root: return "DuplicateComponentRoot";
    case Errc::invalid_type: return "InvalidType";
    case Errc::point_outside_neighborhood: return "PointOutsideO";
    case Errc::uniqueness_failure: return "UniquenessFailure";
    case Errc::unknown_suite: return "UnknownSuite";
  }
  return "UnknownError";
}

Rat rat(long num, long den) {
  if (den == 0) fail(Errc::non_rational_value, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat(const Int& num, const Int& den) {
  if (den == 0) fail(Errc::non_rational_value, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  auto bad = [&]() -> Rat {
    fail(Errc::non_rational_value, "not a rational: '" + text + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return bad();
  Int num(text.substr(0, i));
  Int den(1);
  if (i < text.size()) {
    if (text[i] != '/') return bad();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) return bad();
    den = Int(text.substr(den_begin));
    if (den == 0) return bad();
  }
  return rat(num, den);
}

std::string format_rat(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Int floor_rat(const Rat& value) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

Int ceil_rat(const Rat& value) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

Rat abs_rat(const Rat& value) { return value < 0 ? Rat(-value) : value; }

Rat truncate_ext(const ExtRat& d, const Rat& s) {
  if (!d) return s;
  return *d < s ? *d : s;
}

std::string format_ext(const ExtRat& d) {
  if (!d) return "INF";
  return format_rat(*d);
}

namespace {

// Least admissible integer in the interval, if any.
std::optional<Int> least_integer_in(const Rat& lo, bool lo_closed, const Rat& hi,
                                    bool hi_closed) {
  Int p_lo = lo_closed ? ceil_rat(lo) : floor_rat(lo) + 1;
  Int p_hi = hi_closed ? floor_rat(hi) : ceil_rat(hi) - 1;
  if (p_lo > p_hi) return std::nullopt;
  return p_lo;
}

}  // namespace

Rat simplest_in(const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed) {
  if (lo > hi || (lo == hi && !(lo_closed && hi_closed)))
    throw std::logic_error("simplest_in: empty interval");
  if (lo == hi) return lo;

  // Continued-fraction descent: peel integer parts until some level admits an
  // integer, then rebuild x = n_0 + 1/(n_1 + 1/(... + 1/p)).
  std::vector<Int> quotients;
  Rat a = lo, b = hi;
  bool ac = lo_closed, bc = hi_closed;
  Rat found;
  for (int guard = 0;; ++guard) {
    if (guard > 100000) throw std::logic_error("simplest_in: no convergence");
    if (auto p = least_integer_in(a, ac, b, bc)) {
      found = Rat(*p);
      break;
    }
    Int n = floor_rat(a);
    quotients.push_back(n);
    Rat fa = a - Rat(n);  // 0 <= fa, and the interval sits inside [n, n+1]
    Rat fb = b - Rat(n);
    if (fa == 0) {
      // Left edge open at the integer: inverted interval is unbounded above,
      // so its least admissible integer exists immediately.
      Rat inv_lo = 1 / fb;
      Int p = bc ? ceil_rat(inv_lo) : floor_rat(inv_lo) + 1;
      found = Rat(p);
      break;
    }
    Rat na = 1 / fb;
    Rat nb = 1 / fa;
    a = na;
    b = nb;
    std::swap(ac, bc);
  }
  for (auto it = quotients.rbegin(); it != quotients.rend(); ++it)
    found = Rat(*it) + 1 / found;
  found.canonicalize();
  return found;
}

}  // namespace rforest
