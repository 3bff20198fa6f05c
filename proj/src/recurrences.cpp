#include "bellgamma/recurrences.hpp"

#include <algorithm>
#include <stdexcept>

namespace bellgamma {

namespace {

PolyQ n_poly() { return PolyQ::x(); }

// n + c
PolyQ lin(long c, long k = 1) { return PolyQ{c, k}; }

PolyQ pw(const PolyQ& p, unsigned e) {
  PolyQ r = PolyQ::constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

std::vector<Rat> rats(std::initializer_list<Rat> xs) { return std::vector<Rat>(xs); }

RecurrenceSpec aptekarev() {
  // (16n-15) f_{n+1} = (128n^3+40n^2-82n-45) f_n - n^2(256n^3-240n^2+64n-7) f_{n-1}
  //                    + n^2(n-1)^2(16n+1) f_{n-2}
  const PolyQ n = n_poly();
  const PolyQ n2 = n * n;
  RecurrenceSpec s;
  s.name = "aptekarev";
  s.family = "aptekarev";
  s.order = 3;
  s.shift = -2;
  s.coeffs = {
      -(n2 * pw(lin(-1), 2) * lin(1, 16)),
      n2 * PolyQ{-7, 64, -240, 256},
      -PolyQ{-45, -82, 40, 128},
      lin(-15, 16),
  };
  s.n_min = 2;
  s.initial_values = {{"q", rats({1, 3, 50})}, {"p", rats({0, 2, 31})}};
  return s;
}

RecurrenceSpec rivoal() {
  // (n+3)^2(8n+11)(8n+19) y_{n+3} = (n+3)(8n+11)(24n^2+145n+215) y_{n+2}
  //   - (8n+27)(24n^3+105n^2+124n+25) y_{n+1} + (n+2)^2(8n+19)(8n+27) y_n
  RecurrenceSpec s;
  s.name = "rivoal";
  s.family = "rivoal";
  s.order = 3;
  s.shift = 0;
  s.coeffs = {
      -(pw(lin(2), 2) * lin(19, 8) * lin(27, 8)),
      lin(27, 8) * PolyQ{25, 124, 105, 24},
      -(lin(3) * lin(11, 8) * PolyQ{215, 145, 24}),
      pw(lin(3), 2) * lin(11, 8) * lin(19, 8),
  };
  s.n_min = 0;
  s.initial_values = {{"Q", rats({1, 7, make_rat(65, 2)})}, {"P", rats({-1, 4, make_rat(77, 4)})}};
  return s;
}

RecurrenceSpec a2(bool inhomogeneous) {
  // f_{n+2} - 2(n+2) f_{n+1} + (n+1)^2 f_n = 0   (or = -n/(n+2) for p_n)
  RecurrenceSpec s;
  s.family = "a2";
  s.order = 2;
  s.shift = 0;
  s.coeffs = {pw(lin(1), 2), lin(-4, -2), PolyQ::constant(1)};
  s.n_min = 0;
  if (inhomogeneous) {
    s.name = "a2-inhomogeneous";
    s.inhomogeneous = std::make_pair(PolyQ{0, -1}, lin(2));
    s.initial_values = {{"p", rats({0, 1})}};
  } else {
    s.name = "a2-homogeneous";
    s.initial_values = {{"q", rats({1, 2})}};
  }
  return s;
}

RecurrenceSpec a3(bool inhomogeneous) {
  // (n+1)(8n-9) f_{n+1} = (24n^3+13n^2-32n-18) f_n - n(24n^3-75n^2+52n-5) f_{n-1}
  //                       + n(n-1)^3(8n-1) f_{n-2} [+ 2(8n^4-17n^3+74n^2-12n-9)/(n(n+1))]
  const PolyQ n = n_poly();
  RecurrenceSpec s;
  s.family = "a3";
  s.order = 3;
  s.shift = -2;
  s.coeffs = {
      -(n * pw(lin(-1), 3) * lin(-1, 8)),
      n * PolyQ{-5, 52, -75, 24},
      -PolyQ{-18, -32, 13, 24},
      lin(1) * lin(-9, 8),
  };
  if (inhomogeneous) {
    s.name = "a3-inhomogeneous";
    s.n_min = 2;
    s.inhomogeneous = std::make_pair(PolyQ{-9, -12, 74, -17, 8} * Rat(2), n * lin(1));
    s.initial_values = {{"p2", rats({0, 18, 95})}};
  } else {
    s.name = "a3-homogeneous";
    s.n_min = 2;
    s.initial_values = {{"q", rats({1, 2, 11})}, {"p1", rats({0, 1, make_rat(13, 2)})}};
  }
  return s;
}

RecurrenceSpec a4(bool inhomogeneous) {
  const PolyQ n = n_poly();
  const PolyQ n2 = n * n;
  RecurrenceSpec s;
  s.family = "a4";
  s.order = 4;
  s.shift = -2;
  s.coeffs = {
      // + n^2(n-1)^4(729n^4+2754n^3+3717n^2+2084n+398) f_{n-2}
      n2 * pw(lin(-1), 4) * PolyQ{398, 2084, 3717, 2754, 729},
      // - n^2(2916n^7+28512n^6+61848n^5+37667n^4-12898n^3-17463n^2-2692n+398) f_{n-1}
      -(n2 * PolyQ{398, -2692, -17463, -12898, 37667, 61848, 28512, 2916}),
      // + (4374n^8-18468n^7-82674n^6-85776n^5-13062n^4+24204n^3+13528n^2+2680n+168) f_n
      PolyQ{168, 2680, 13528, 24204, -13062, -85776, -82674, -18468, 4374},
      // - (2916n^7+14661n^6+20862n^5+947n^4-13008n^3-2370n^2+1320n+312) f_{n+1}
      -PolyQ{312, 1320, -2370, -13008, 947, 20862, 14661, 2916},
      // (n+2)^2(729n^4-162n^3-171n^2-4n+6) f_{n+2}
      pw(lin(2), 2) * PolyQ{6, -4, -171, -162, 729},
  };
  s.n_min = 2;
  if (inhomogeneous) {
    s.name = "a4-inhomogeneous";
    // -6(729n^10+2754n^9-17424n^8-179680n^7-490669n^6-549106n^5-194460n^4
    //    +100424n^3+105332n^2+30840n+3184)/(n(n+1)^2(n+2)), moved to the left-hand side
    s.inhomogeneous = std::make_pair(
        PolyQ{3184, 30840, 105332, 100424, -194460, -549106, -490669, -179680, -17424, 2754, 729} * Rat(-6),
        n * pw(lin(1), 2) * lin(2));
    s.initial_values = {{"p3", rats({0, 60, 402, make_rat(50761, 9)})}};
  } else {
    s.name = "a4-homogeneous";
    s.initial_values = {{"q", rats({1, 2, 19, 250})},
                        {"p1", rats({0, 1, 13, make_rat(409, 3)})},
                        {"p2", rats({0, 32, 217, make_rat(26444, 9)})}};
  }
  return s;
}

}  // namespace

RecurrenceReport recurrence_check(const RecurrenceSpec& spec, std::span<const Rat> seq, long n_lo, long n_hi) {
  RecurrenceReport rep;
  const long lo = std::max({n_lo, spec.n_min, static_cast<long>(-spec.shift)});
  const long hi = std::min(n_hi, static_cast<long>(seq.size()) - 1 - spec.shift - static_cast<long>(spec.order));
  for (long n = lo; n <= hi; ++n) {
    const Rat nn(n);
    if (spec.leading()(nn) == 0) {
      rep.skipped.push_back(n);
      continue;
    }
    Rat lhs = 0;
    for (unsigned i = 0; i <= spec.order; ++i) lhs += spec.coeffs[i](nn) * seq[n + spec.shift + i];
    Rat rhs = 0;
    if (spec.inhomogeneous) {
      const Rat den = spec.inhomogeneous->second(nn);
      if (den == 0) {
        rep.skipped.push_back(n);
        continue;
      }
      lhs *= den;
      rhs = spec.inhomogeneous->first(nn);
    }
    ++rep.checked;
    if (lhs != rhs) {
      rep.holds = false;
      if (!rep.first_failure) rep.first_failure = n;
    }
  }
  return rep;
}

std::vector<Rat> solve_recurrence(const RecurrenceSpec& spec, std::span<const Rat> initial, unsigned n_max) {
  if (initial.size() < spec.order) throw std::invalid_argument("solve_recurrence: not enough initial values");
  std::vector<Rat> f(initial.begin(), initial.end());
  while (f.size() < static_cast<std::size_t>(n_max) + 1) {
    const long top = static_cast<long>(f.size());  // index to solve for
    const long n = top - spec.shift - static_cast<long>(spec.order);
    if (n < spec.n_min) throw std::invalid_argument("solve_recurrence: initial values do not reach n_min");
    const Rat nn(n);
    Rat acc = 0;
    if (spec.inhomogeneous) acc = spec.inhomogeneous->first(nn) / spec.inhomogeneous->second(nn);
    for (unsigned i = 0; i < spec.order; ++i) acc -= spec.coeffs[i](nn) * f[n + spec.shift + i];
    const Rat lead = spec.leading()(nn);
    if (lead == 0) throw std::domain_error("solve_recurrence: leading coefficient vanishes");
    f.push_back(acc / lead);
  }
  f.resize(n_max + 1);
  return f;
}

std::map<std::string, RecurrenceSpec> make_paper_recurrences() {
  std::map<std::string, RecurrenceSpec> out;
  for (RecurrenceSpec s : {aptekarev(), rivoal(), a2(false), a2(true), a3(false), a3(true), a4(false), a4(true)})
    out.emplace(s.name, std::move(s));
  return out;
}

std::pair<std::vector<Rat>, std::vector<Rat>> rivoal_seq(unsigned n_max) {
  const RecurrenceSpec s = rivoal();
  return {solve_recurrence(s, s.initial_values.at("P"), n_max), solve_recurrence(s, s.initial_values.at("Q"), n_max)};
}

}  // namespace bellgamma
