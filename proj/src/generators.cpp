#include "maxtoll/generators.hpp"

#include <bit>
#include <cstdio>
#include <string>

#include "maxtoll/error.hpp"
#include "maxtoll/explore.hpp"

namespace maxtoll {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Z: return "Z";
    case Family::ZMod: return "Z_MOD";
    case Family::Sat: return "SAT";
    case Family::Fixture: return "FIXTURE";
    case Family::Random: return "RANDOM";
  }
  return "UNKNOWN";
}

// ---------------------------------------------------------------------------
// Z(k)

namespace {

Arc make_arc(std::string id, std::string from, std::string to, Rational cost, ArcKind kind) {
  return Arc{std::move(id), std::move(from), std::move(to), std::move(cost), kind};
}

// Emits the arcs of a Z(k) block whose terminals are s<label>, t<label>.
// The floor(k/2) copy gets label + "L", the ceil(k/2) copy label + "R".
void emit_z(std::size_t k, const std::string& label, const Rational& scale, std::vector<Arc>& arcs) {
  const std::string s = "s" + label;
  const std::string t = "t" + label;
  if (k == 1) {
    arcs.push_back(make_arc("toll" + label, s, t, Rational(0), ArcKind::Toll));
    arcs.push_back(make_arc("free" + label, s, t, Rational(2) * scale, ArcKind::Free));
    return;
  }
  const std::size_t lo = k / 2;
  const std::size_t hi = (k + 1) / 2;
  const std::string lo_label = label + "L";
  const std::string hi_label = label + "R";
  emit_z(lo, lo_label, scale, arcs);
  emit_z(hi, hi_label, scale, arcs);

  const Rational a_k = Rational(1) + alpha(lo) - alpha(hi);
  const Rational b_k = Rational(1) - alpha(lo) + alpha(hi);
  arcs.push_back(make_arc("in" + label, s, "s" + lo_label, Rational(0), ArcKind::Free));
  arcs.push_back(make_arc("mid" + label, "t" + lo_label, "s" + hi_label, Rational(0), ArcKind::Free));
  arcs.push_back(make_arc("out" + label, "t" + hi_label, t, Rational(0), ArcKind::Free));
  arcs.push_back(make_arc("a" + label, s, "s" + hi_label, a_k * scale, ArcKind::Free));
  arcs.push_back(make_arc("b" + label, "t" + lo_label, t, b_k * scale, ArcKind::Free));
}

std::int64_t z_scale(std::size_t k) { return static_cast<std::int64_t>(std::bit_ceil(k)); }

}  // namespace

Generated gen_z(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "Z(k) needs k >= 1");
  const std::int64_t scale = z_scale(k);
  std::vector<Arc> arcs;
  emit_z(k, "", Rational(scale), arcs);
  for (const Arc& arc : arcs) {
    if (!arc.cost.is_integer()) throw std::logic_error("gen_z: cost did not integerize");
  }
  Generated out{build_network(std::move(arcs), "s", "t"), {}};
  out.meta.family = Family::Z;
  out.meta.parameter = k;
  out.meta.scale = scale;
  out.meta.expected.lp = Rational(2 * scale) * alpha(k);
  out.meta.expected.opt = Rational(2 * scale);
  return out;
}

Generated gen_z_mod(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "Z(k) needs k >= 1");
  const std::int64_t scale = z_scale(k);
  std::vector<Arc> arcs;
  emit_z(k, "", Rational(scale), arcs);
  arcs.push_back(make_arc("direct", "s", "t", Rational(scale), ArcKind::Toll));
  Generated out{build_network(std::move(arcs), "s", "t"), {}};
  out.meta.family = Family::ZMod;
  out.meta.parameter = k;
  out.meta.scale = scale;
  if (k >= 2) {
    out.meta.expected.lp = Rational(2 * scale) * alpha(k);
    out.meta.expected.opt = Rational(scale) * (Rational(2) * alpha(k) - Rational(1));
    out.meta.expected.app = Rational(2 * scale);
  }
  return out;
}

// ---------------------------------------------------------------------------
// 3-SAT reduction

bool is_satisfiable(const SatInstance& formula) {
  if (formula.variables < 0 || formula.variables > 24) {
    throw Error(ErrorCode::GuardExceeded, "brute-force satisfiability supports at most 24 variables");
  }
  const std::uint32_t count = std::uint32_t{1} << formula.variables;
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    bool all = true;
    for (const auto& clause : formula.clauses) {
      bool any = false;
      for (int lit : clause) {
        bool value = (bits >> (std::abs(lit) - 1)) & 1U;
        if ((lit > 0) == value) {
          any = true;
          break;
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

Generated gen_sat(const SatInstance& formula) {
  const std::size_t m = formula.clauses.size();
  if (m == 0) throw Error(ErrorCode::MalformedClause, "formula has no clauses");
  for (std::size_t i = 0; i < m; ++i) {
    for (int lit : formula.clauses[i]) {
      if (lit == 0 || std::abs(lit) > formula.variables) {
        throw Error(ErrorCode::MalformedClause,
                    "clause " + std::to_string(i + 1) + " has literal " + std::to_string(lit) + " out of range");
      }
    }
  }

  auto u = [](std::size_t i) { return "u" + std::to_string(i); };
  auto w = [](std::size_t i) { return "w" + std::to_string(i); };
  auto p = [](std::size_t i, std::size_t j) { return "p" + std::to_string(i) + "_" + std::to_string(j); };
  auto q = [](std::size_t i, std::size_t j) { return "q" + std::to_string(i) + "_" + std::to_string(j); };
  auto tag = [](std::size_t i, std::size_t j) { return std::to_string(i) + "_" + std::to_string(j); };

  std::vector<Arc> arcs;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      arcs.push_back(make_arc("enter" + tag(i, j), u(i), p(i, j), Rational(0), ArcKind::Free));
      arcs.push_back(make_arc("lit" + tag(i, j), p(i, j), q(i, j), Rational(0), ArcKind::Toll));
      arcs.push_back(make_arc("leave" + tag(i, j), q(i, j), w(i), Rational(0), ArcKind::Free));
    }
    arcs.push_back(make_arc("bypass" + std::to_string(i), u(i), w(i), Rational(1), ArcKind::Free));
    if (i < m) {
      arcs.push_back(make_arc("link" + std::to_string(i), w(i), u(i + 1), Rational(0), ArcKind::Toll));
      arcs.push_back(make_arc("skip" + std::to_string(i), w(i), u(i + 1), Rational(2), ArcKind::Free));
    }
  }
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      for (std::size_t i2 = i + 1; i2 <= m; ++i2) {
        for (std::size_t j2 = 1; j2 <= 3; ++j2) {
          if (formula.clauses[i - 1][j - 1] != -formula.clauses[i2 - 1][j2 - 1]) continue;
          auto cost = static_cast<std::int64_t>(3 * (i2 - i)) - 2;
          arcs.push_back(
              make_arc("cons" + tag(i, j) + "_" + tag(i2, j2), q(i, j), p(i2, j2), Rational(cost), ArcKind::Free));
        }
      }
    }
  }

  Generated out{build_network(std::move(arcs), u(1), w(m)), {}};
  out.meta.family = Family::Sat;
  out.meta.parameter = m;
  out.meta.expected.lp = Rational(3 * static_cast<std::int64_t>(m) - 2);
  return out;
}

// ---------------------------------------------------------------------------
// Fixtures

Network fixture_fig2() {
  std::vector<Arc> arcs{
      make_arc("T1", "a1", "b1", Rational(0), ArcKind::Toll),
      make_arc("T2", "a2", "b2", Rational(0), ArcKind::Toll),
      make_arc("s-a1", "s", "a1", Rational(0), ArcKind::Free),
      make_arc("b1-a2", "b1", "a2", Rational(0), ArcKind::Free),
      make_arc("b2-t", "b2", "t", Rational(0), ArcKind::Free),
      make_arc("s-a2", "s", "a2", Rational(11), ArcKind::Free),
      make_arc("b1-t", "b1", "t", Rational(7), ArcKind::Free),
      make_arc("s-t", "s", "t", Rational(4), ArcKind::Free),
  };
  return build_network(std::move(arcs), "s", "t");
}

Network fixture_fig7() {
  std::vector<Arc> arcs{
      make_arc("s-v1", "s", "v1", Rational(0), ArcKind::Free),
      make_arc("T1", "v1", "v2", Rational(0), ArcKind::Toll),
      make_arc("v2-v3", "v2", "v3", Rational(0), ArcKind::Free),
      make_arc("T2", "v3", "v4", Rational(0), ArcKind::Toll),
      make_arc("v4-v5", "v4", "v5", Rational(0), ArcKind::Free),
      make_arc("T3", "v5", "v6", Rational(0), ArcKind::Toll),
      make_arc("v6-v7", "v6", "v7", Rational(0), ArcKind::Free),
      make_arc("T4", "v7", "v8", Rational(0), ArcKind::Toll),
      make_arc("v8-t", "v8", "t", Rational(0), ArcKind::Free),
      make_arc("s-v3", "s", "v3", Rational(1), ArcKind::Free),
      make_arc("s-v7", "s", "v7", Rational(3), ArcKind::Free),
      make_arc("v4-t", "v4", "t", Rational(1), ArcKind::Free),
      make_arc("s-t", "s", "t", Rational(10), ArcKind::Free),
  };
  return build_network(std::move(arcs), "s", "t");
}

// ---------------------------------------------------------------------------
// Random layered networks

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool SplitMix64::bernoulli(const Rational& p) {
  // 53 high bits as a uniform dyadic in [0, 1).
  const Rational u(static_cast<Rational::Int>(next() >> 11), static_cast<Rational::Int>(1) << 53);
  return u < p;
}

Generated gen_random(const RandomSpec& spec) {
  if (spec.layers < 2 || spec.width < 1 || spec.cmax < 1) {
    throw Error(ErrorCode::InvalidArgument, "gen_random needs layers >= 2, width >= 1, cmax >= 1");
  }
  if (spec.p_toll < Rational(0) || spec.p_toll > Rational(1)) {
    throw Error(ErrorCode::InvalidArgument, "p_toll must lie in [0, 1]");
  }
  SplitMix64 rng(spec.seed);
  auto node = [](std::size_t layer, std::size_t slot) {
    return "n" + std::to_string(layer) + "_" + std::to_string(slot);
  };

  std::vector<Arc> arcs;
  auto add_forward = [&](std::string from, std::string to) {
    char id[16];
    std::snprintf(id, sizeof id, "e%04zu", arcs.size());
    bool toll = rng.bernoulli(spec.p_toll);
    auto cost = static_cast<std::int64_t>(rng.below_or_equal(static_cast<std::uint64_t>(spec.cmax)));
    arcs.push_back(make_arc(id, std::move(from), std::move(to), Rational(cost), toll ? ArcKind::Toll : ArcKind::Free));
  };

  for (std::size_t w = 1; w <= spec.width; ++w) add_forward("s", node(1, w));
  for (std::size_t l = 1; l < spec.layers; ++l) {
    for (std::size_t from = 1; from <= spec.width; ++from) {
      for (std::size_t to = 1; to <= spec.width; ++to) add_forward(node(l, from), node(l + 1, to));
    }
  }
  for (std::size_t w = 1; w <= spec.width; ++w) add_forward(node(spec.layers, w), "t");
  arcs.push_back(make_arc("backbone", "s", "t",
                          Rational(static_cast<std::int64_t>(spec.layers + 1) * spec.cmax), ArcKind::Free));

  Generated out{build_network(std::move(arcs), "s", "t"), {}};
  out.meta.family = Family::Random;
  out.meta.parameter = spec.layers;
  return out;
}

}  // namespace maxtoll
