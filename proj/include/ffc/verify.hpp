#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ffc/algebra.hpp"
#include "ffc/base.hpp"
#include "ffc/extension.hpp"
#include "ffc/filters.hpp"
#include "ffc/ideals.hpp"
#include "ffc/instance.hpp"
#include "ffc/morphisms.hpp"
#include "ffc/oracle.hpp"
#include "ffc/randgen.hpp"
#include "ffc/spectrum.hpp"

namespace ffc {

struct CheckResult {
  std::string theorem;
  CheckStatus status = CheckStatus::pass;
  Json counterexample;  // null unless failed
};

struct VerifyContext {
  InstanceFile inst;
  Algebra alg;
  SpectrumSpace space;
  std::string digest;
  std::uint64_t aux_seed;  // digest-derived; seeds the sampled sub-checks
};

inline VerifyContext make_context(InstanceFile inst) {
  Algebra alg = to_algebra(inst);
  SpectrumSpace space = build_spectrum(alg);
  std::string digest = instance_digest(inst);
  const std::uint64_t aux = fnv1a64(digest);
  return VerifyContext{std::move(inst), std::move(alg), std::move(space), digest, aux};
}

namespace checks {

// deterministic member sample: constants, generators, conjugates, products,
// per-block shifts, indicators
inline std::vector<Func> member_sample(const Algebra& a) {
  std::vector<Func> out;
  out.push_back(func_const(a.size(), Complex(0)));
  out.push_back(func_const(a.size(), Complex(1)));
  out.push_back(func_const(a.size(), Complex(Rat(0), Rat(1))));
  for (const auto& [name, g] : a.generators) {
    out.push_back(g);
    out.push_back(conj(g));
    out.push_back(g * g);
    for (int b = 0; b < a.dim(); ++b)
      out.push_back(g - func_const(a.size(), block_value(a, g, b)));
  }
  for (int b = 0; b < a.dim(); ++b) out.push_back(block_indicator(a, b));
  if (a.generators.size() >= 2)
    out.push_back(a.generators[0].second * a.generators[1].second);
  return out;
}

inline Json witness(std::initializer_list<std::pair<std::string, Json>> kv) {
  Json j = Json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

using CheckFn = std::function<CheckStatus(const VerifyContext&, Json&)>;

inline CheckStatus kernel_partition_idempotent(const VerifyContext& c, Json& cex) {
  std::vector<Func> inds;
  for (int b = 0; b < c.alg.dim(); ++b) inds.push_back(block_indicator(c.alg, b));
  const Partition again = kernel_partition(c.alg.ground, inds);
  if (!(again == c.alg.partition)) {
    cex = witness({{"detail", "partition of block indicators differs"}});
    return CheckStatus::fail;
  }
  return CheckStatus::pass;
}

inline CheckStatus algebra_membership_basics(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  for (const auto& [name, g] : a.generators)
    if (!contains(a, g)) {
      cex = witness({{"generator", name}});
      return CheckStatus::fail;
    }
  if (!contains(a, func_const(a.size(), Complex(Rat(3, 7), Rat(-1, 2))))) {
    cex = witness({{"detail", "constant function rejected"}});
    return CheckStatus::fail;
  }
  for (int b = 0; b < a.dim(); ++b) {
    const Mask blk = a.partition.blocks[b];
    if (popcount(blk) < 2) continue;
    const Func f = indicator(bit(lowest_bit(blk)), a.size());
    if (contains(a, f)) {
      cex = witness({{"detail", "function non-constant on a block accepted"},
                     {"block", b}});
      return CheckStatus::fail;
    }
  }
  return CheckStatus::pass;
}

inline CheckStatus inverse_roundtrip(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  std::vector<Complex> vals;
  for (int b = 0; b < a.dim(); ++b) vals.push_back(Complex(Rat(b + 2, b + 1)));
  const Func f = func_from_block_values(a, vals);
  if (in_F0(f) || in_F0_by_thresholds(f)) {
    cex = witness({{"detail", "zero-free member classified in F0"}});
    return CheckStatus::fail;
  }
  const Func inv = invert(a, f);
  if (!(f * inv == func_const(a.size(), Complex(1))) || !(invert(a, inv) == f) ||
      !contains(a, inv)) {
    cex = witness({{"detail", "inverse laws failed"}});
    return CheckStatus::fail;
  }
  const Func z = f - func_from_block_values(a, std::vector<Complex>(a.dim(), vals[0]));
  if (a.dim() >= 2) {  // z vanishes on block 0 only
    if (!in_F0(z) || in_F0(z) != in_F0_by_thresholds(z)) {
      cex = witness({{"detail", "member with a zero escaped F0"}});
      return CheckStatus::fail;
    }
    try {
      invert(a, z);
      cex = witness({{"detail", "inverted a member of F0"}});
      return CheckStatus::fail;
    } catch (const std::domain_error&) {
    }
  }
  return CheckStatus::pass;
}

inline CheckStatus f0_threshold_agreement(const VerifyContext& c, Json& cex) {
  for (const Func& f : member_sample(c.alg))
    if (in_F0(f) != in_F0_by_thresholds(f)) {
      cex = witness({{"detail", "fast and threshold-eliminated F0 checks disagree"}});
      return CheckStatus::fail;
    }
  return CheckStatus::pass;
}

inline CheckStatus lattice_laws(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  std::vector<Func> reals;
  for (const Func& f : member_sample(a))
    if (f.is_real()) reals.push_back(f);
  for (const Func& f : reals)
    for (const Func& g : reals) {
      const Func j = func_join(f, g), m = func_meet(f, g);
      for (int x = 0; x < a.size(); ++x) {
        if (j[x].re != std::max(f[x].re, g[x].re) || m[x].re != std::min(f[x].re, g[x].re)) {
          cex = witness({{"detail", "join/meet not pointwise max/min"}});
          return CheckStatus::fail;
        }
      }
      if (!(func_join(f, f) == f) || !(func_join(f, g) == func_join(g, f))) {
        cex = witness({{"detail", "join laws failed"}});
        return CheckStatus::fail;
      }
    }
  try {
    func_join(func_const(a.size(), Complex(Rat(0), Rat(1))), reals.front());
    cex = witness({{"detail", "lattice op accepted complex input"}});
    return CheckStatus::fail;
  } catch (const std::domain_error&) {
  }
  return CheckStatus::pass;
}

inline CheckStatus level_set_monotone_zero_limit(const VerifyContext& c, Json& cex) {
  for (const Func& f : member_sample(c.alg)) {
    const auto radii = critical_radii_sq(f);
    Mask prev = 0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const Mask s = level_set_sq(f, radii[i]);
      if (i > 0 && !subset_of(prev, s)) {
        cex = witness({{"detail", "level sets not monotone in the radius"}});
        return CheckStatus::fail;
      }
      prev = s;
    }
    if (level_set_sq(f, radii.front()) != zero_set(f)) {
      cex = witness({{"detail", "sub-threshold level set is not the zero set"}});
      return CheckStatus::fail;
    }
    if (level_set(f, Rat(1, 2)) != level_set_sq(f, Rat(1, 4))) {
      cex = witness({{"detail", "rational radius disagrees with squared form"}});
      return CheckStatus::fail;
    }
  }
  return CheckStatus::pass;
}

inline CheckStatus filter_enumeration_counts(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  const auto filters = enumerate_F_filters(a);
  const auto ultras = enumerate_ultrafilters(a);
  const std::size_t expected = (std::size_t{1} << a.dim()) - 1;
  bool ok = filters.size() == expected && ultras.size() == static_cast<std::size_t>(a.dim());
  std::set<Mask> gens;
  for (const FFilter& phi : filters) {
    ok = ok && is_F_filter_generator(a, phi.generator);
    gens.insert(phi.generator);
  }
  ok = ok && gens.size() == filters.size();
  // ultrafilters are exactly the filters with no strictly smaller generator
  for (const FFilter& phi : filters) {
    bool maximal = true;
    for (const FFilter& psi : filters)
      if (psi.generator != phi.generator && subset_of(psi.generator, phi.generator))
        maximal = false;
    const bool is_block =
        a.partition.blocks[a.partition.block_of[lowest_bit(phi.generator)]] ==
        phi.generator;
    ok = ok && maximal == is_block;
  }
  if (!ok) {
    cex = witness({{"count", filters.size()}, {"expected", expected}});
    return CheckStatus::fail;
  }
  return CheckStatus::pass;
}

inline CheckStatus zero_set_filter_base(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  if (a.size() > 10) return CheckStatus::skipped;
  for (const FFilter& phi : enumerate_F_filters(a)) {
    const Func w = func_const(a.size(), Complex(1)) - indicator(phi.generator, a.size());
    for (Mask A : filter_members(a.size(), phi.generator)) {
      if (A == a.ground.universe()) continue;
      // the witness has generator ⊆ Z(w) ⊆ A and lies in the algebra
      if (!contains(a, w) || zero_set(w) != phi.generator || !subset_of(zero_set(w), A)) {
        cex = witness({{"generator", a.ground.format_subset(phi.generator)},
                       {"member", a.ground.format_subset(A)}});
        return CheckStatus::fail;
      }
    }
  }
  return CheckStatus::pass;
}

inline CheckStatus f_family_fast_vs_witness_search(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  if (a.size() > 6) return CheckStatus::skipped;
  const Mask U = a.ground.universe();
  std::vector<SetFamily> fams;
  for (Mask A = 1; A <= U; ++A) fams.push_back(SetFamily{{A, U}});
  for (const FFilter& phi : enumerate_F_filters(a))
    fams.push_back(SetFamily{filter_members(a.size(), phi.generator)});
  SplitMix64 rng(c.aux_seed ^ 0xf4a11e5ull);
  for (int t = 0; t < 20; ++t) {
    std::set<Mask> sets;
    const int k = 1 + static_cast<int>(rng.bounded(3));
    for (int i = 0; i < k; ++i) sets.insert(1 + rng.bounded(U));
    fams.push_back(SetFamily{std::vector<Mask>(sets.begin(), sets.end())});
  }
  for (const SetFamily& fam : fams)
    if (is_F_family(a, fam) != oracle::brute_F_family(a, fam)) {
      Json sets = Json::array();
      for (Mask s : fam.sets) sets.push_back(a.ground.format_subset(s));
      cex = witness({{"family", sets}});
      return CheckStatus::fail;
    }
  return CheckStatus::pass;
}

inline CheckStatus ultrafilter_five_equivalences(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  if (a.size() > 8) return CheckStatus::skipped;
  const Mask U = a.ground.universe();
  for (Mask G = 1; G <= U; ++G) {
    const FiveWay five = ultrafilter_characterizations(a, G);
    const bool all_same = five[0] == five[1] && five[1] == five[2] &&
                          five[2] == five[3] && five[3] == five[4];
    const bool expect = is_F_filter_generator(a, G) &&
                        G == a.partition.blocks[a.partition.block_of[lowest_bit(G)]];
    if (!all_same || five[0] != expect) {
      cex = witness({{"generator", a.ground.format_subset(G)},
                     {"verdicts", Json::array({five[0], five[1], five[2], five[3], five[4]})}});
      return CheckStatus::fail;
    }
  }
  return CheckStatus::pass;
}

inline CheckStatus extend_to_ultrafilter_laws(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  const Mask U = a.ground.universe();
  for (const FFilter& phi : enumerate_F_filters(a)) {
    const SetFamily fam = phi.generator == U
                              ? SetFamily{{U}}
                              : SetFamily{{phi.generator, U}};
    const UltraPoint p = extend_to_ultrafilter(a, fam);
    const Mask blk = a.partition.blocks[p.block];
    bool least = true;
    for (int b2 = 0; b2 < p.block; ++b2)
      if (subset_of(a.partition.blocks[b2], phi.generator)) least = false;
    if (!subset_of(blk, phi.generator) || !least) {
      cex = witness({{"generator", a.ground.format_subset(phi.generator)},
                     {"block", p.block}});
      return CheckStatus::fail;
    }
  }
  if (a.dim() >= 2) {
    const SetFamily no_fip{{a.partition.blocks[0], a.partition.blocks[1]}};
    try {
      extend_to_ultrafilter(a, no_fip);
      cex = witness({{"detail", "extension accepted a family without the FIP"}});
      return CheckStatus::fail;
    } catch (const std::invalid_argument&) {
    }
  }
  return CheckStatus::pass;
}

inline CheckStatus interior_membership_equivalence(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  if (a.size() > 10) return CheckStatus::skipped;
  const Mask U = a.ground.universe();
  for (const FFilter& phi : enumerate_F_filters(a))
    for (Mask C = 0; C <= U; ++C)
      if (filter_contains(phi, C) != filter_contains(phi, tau_interior(a, C))) {
        cex = witness({{"generator", a.ground.format_subset(phi.generator)},
                       {"set", a.ground.format_subset(C)}});
        return CheckStatus::fail;
      }
  return CheckStatus::pass;
}

inline CheckStatus evaluation_map_wellformed(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  const SpectrumSpace& sp = c.space;
  if (a.dim() > 12) return CheckStatus::skipped;
  for (int x = 0; x < a.size(); ++x) {
    const Mask blk = a.partition.blocks[a.partition.block_of[x]];
    if (sp.point_block[sp.eval[x]] != blk || !is_F_filter_generator(a, blk)) {
      cex = witness({{"element", a.ground.labels[x]}});
      return CheckStatus::fail;
    }
    // the level sets of members vanishing at x form a base of ⟨block(x)⟩:
    // each contains the block, and their intersection is exactly the block
    Mask inter = a.ground.universe();
    std::vector<int> free_blocks;
    for (int b = 0; b < a.dim(); ++b)
      if (b != a.partition.block_of[x]) free_blocks.push_back(b);
    for (Mask w = 0; w < (Mask{1} << free_blocks.size()); ++w) {
      Mask ones = 0;
      for (std::size_t j = 0; j < free_blocks.size(); ++j)
        if (w & bit(static_cast<int>(j))) ones |= a.partition.blocks[free_blocks[j]];
      const Mask zeros = a.ground.universe() & ~ones;  // X(f, sub-threshold)
      if (!subset_of(blk, zeros)) {
        cex = witness({{"element", a.ground.labels[x]}});
        return CheckStatus::fail;
      }
      inter &= zeros;
    }
    if (inter != blk) {
      cex = witness({{"element", a.ground.labels[x]}});
      return CheckStatus::fail;
    }
  }
  return CheckStatus::pass;
}

inline CheckStatus closed_set_filter_bijection(const VerifyContext& c, Json& cex) {
  const SpectrumSpace& sp = c.space;
  const int b = sp.point_count();
  if (b > 12) return CheckStatus::skipped;
  const auto filters = enumerate_F_filters(c.alg);
  if (filters.size() != (std::size_t{1} << b) - 1) {
    cex = witness({{"detail", "filter count differs from non-empty closed sets"}});
    return CheckStatus::fail;
  }
  for (PointSet s = 1; s < (Mask{1} << b); ++s) {
    const FFilter phi = closed_set_to_filter(sp, s);
    if (filter_closure(sp, phi) != s) {
      cex = witness({{"points", sp.format_points(s)}});
      return CheckStatus::fail;
    }
  }
  for (const FFilter& phi : filters) {
    const FFilter back = closed_set_to_filter(sp, filter_closure(sp, phi));
    if (!(back == phi)) {
      cex = witness({{"generator", c.alg.ground.format_subset(phi.generator)}});
      return CheckStatus::fail;
    }
  }
  return CheckStatus::pass;
}

inline CheckStatus extension_restriction_identity(const VerifyContext& c, Json& cex) {
  for (const Func& f : member_sample(c.alg)) {
    if (!contains(c.alg, f)) continue;
    if (!(pullback(c.space, extend(c.space, f)) == f)) {
      cex = witness({{"detail", "extension does not restrict to the function"}});
      return CheckStatus::fail;
    }
  }
  const Func non_member = [&]() -> Func {
    for (Mask blk : c.alg.partition.blocks)
      if (popcount(blk) >= 2) return indicator(bit(lowest_bit(blk)), c.alg.size());
    return Func();
  }();
  if (non_member.size() > 0) {
    try {
      extend(c.space, non_member);
      cex = witness({{"detail", "extended a non-member"}});
      return CheckStatus::fail;
    } catch (const std::invalid_argument&) {
    }
  }
  return CheckStatus::pass;
}

inline CheckStatus extension_star_isomorphism(const VerifyContext& c, Json& cex) {
  const Report rep = gamma_check(c.space);
  for (const CheckItem& it : rep.items)
    if (it.status == CheckStatus::fail) {
      cex = witness({{"item", it.name}, {"detail", it.detail}});
      return CheckStatus::fail;
    }
  return CheckStatus::pass;
}

inline CheckStatus rset_membership(const VerifyContext& c, Json& cex) {
  const SpectrumSpace& sp = c.space;
  std::vector<SpectrumFunc> gs;
  for (const auto& [name, g] : c.alg.generators) gs.push_back(extend(sp, g));
  gs.push_back(random_target(c.aux_seed ^ 0x75e7ull, sp.point_count(), TargetKind::complex));
  for (const SpectrumFunc& g : gs)
    for (int p = 0; p < sp.point_count(); ++p)
      for (const Rat& r : {Rat(1, 3), Rat(1, 2), Rat(2)}) {
        const Mask s = rset(sp, p, g, r);
        if (!subset_of(sp.point_block[p], s)) {
          cex = witness({{"point", p}, {"radius", format_rat(r)}});
          return CheckStatus::fail;
        }
      }
  return CheckStatus::pass;
}

inline CheckStatus approximation_within_radius(const VerifyContext& c, Json& cex) {
  const SpectrumSpace& sp = c.space;
  const std::vector<TargetKind> kinds = {TargetKind::positive_norm1, TargetKind::real,
                                         TargetKind::complex, TargetKind::constant};
  int ki = 0;
  for (TargetKind kind : kinds) {
    ++ki;
    for (const Rat& r : {Rat(1, 3), Rat(1, 5), Rat(1, 10)}) {
      const SpectrumFunc g =
          random_target(c.aux_seed ^ (0xa99ull * ki), sp.point_count(), kind);
      const ApproxResult res = approximate(sp, g, r);
      bool ok = res.trace.achieved_sq <= r * r && contains(c.alg, res.f);
      for (const CoreTrace& core : res.trace.cores) {
        ok = ok && Rat(1, core.n) <= core.radius / 3;
        for (std::size_t k = 0; k < core.levels.size(); ++k)
          for (std::size_t j = k + 3; j < core.levels.size(); ++j)
            ok = ok && (core.levels[k].a_set & core.levels[j].a_set) == 0;
        for (const ApproxLevel& lev : core.levels)
          for (const BumpChoice& bump : lev.bumps)
            ok = ok && subset_of(bump.support, lev.a_set);
      }
      if (!ok) {
        cex = witness({{"radius", format_rat(r)},
                       {"achieved_sq", format_rat(res.trace.achieved_sq)},
                       {"target", target_to_json(g)}});
        return CheckStatus::fail;
      }
    }
  }
  return CheckStatus::pass;
}

inline CheckStatus dense_image_factorization_laws(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  std::vector<std::vector<int>> eps_choices;
  std::vector<int> eps_id(a.size());
  for (int x = 0; x < a.size(); ++x) eps_id[x] = a.partition.block_of[x];
  eps_choices.push_back(eps_id);  // fibers = blocks
  std::vector<int> eps_half(a.size());
  for (int x = 0; x < a.size(); ++x) eps_half[x] = a.partition.block_of[x] / 2;
  eps_choices.push_back(eps_half);
  eps_choices.push_back(std::vector<int>(a.size(), 0));  // one-point image
  for (const auto& eps : eps_choices) {
    int m = 0;
    for (int y : eps) m = std::max(m, y + 1);
    std::vector<std::string> y_labels;
    for (int y = 0; y < m; ++y) y_labels.push_back("y" + std::to_string(y));
    const DenseImageResult res = dense_image_factorization(a.ground, y_labels, eps);
    const SpectrumSpace isp = build_spectrum(res.induced);
    if (isp.point_count() != m) {
      cex = witness({{"detail", "induced spectrum size differs from the image"}});
      return CheckStatus::fail;
    }
  }
  try {
    dense_image_factorization(a.ground, {"y0", "unreached"},
                              std::vector<int>(a.size(), 0));
    cex = witness({{"detail", "non-surjective map accepted"}});
    return CheckStatus::fail;
  } catch (const std::domain_error&) {
  }
  return CheckStatus::pass;
}

inline std::vector<Ideal> all_ideals(const Algebra& a) {
  std::vector<Ideal> out;
  for (Mask s = 1; s < (Mask{1} << a.dim()); ++s) {
    Mask v = 0;
    for_each_bit(s, [&](int i) { v |= a.partition.blocks[i]; });
    out.push_back(Ideal{v});
  }
  return out;
}

inline CheckStatus ideal_filter_galois_bijection(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  if (a.dim() > 12) return CheckStatus::skipped;
  const auto ideals = all_ideals(a);
  const auto filters = enumerate_F_filters(a);
  if (ideals.size() != filters.size()) {
    cex = witness({{"ideals", ideals.size()}, {"filters", filters.size()}});
    return CheckStatus::fail;
  }
  for (const Ideal& i : ideals) {
    const FFilter phi = filter_from_ideal(a, i);
    if (!(ideal_from_filter(a, phi) == i)) {
      cex = witness({{"vanishing", a.ground.format_subset(i.vanishing)}});
      return CheckStatus::fail;
    }
  }
  for (const FFilter& phi : filters) {
    const Ideal i = ideal_from_filter(a, phi);
    if (!(filter_from_ideal(a, i) == phi)) {
      cex = witness({{"generator", a.ground.format_subset(phi.generator)}});
      return CheckStatus::fail;
    }
  }
  // inclusion alignment: I ⊆ J iff the corresponding generators nest
  for (const Ideal& i : ideals)
    for (const Ideal& j : ideals) {
      const bool incl = subset_of(j.vanishing, i.vanishing);  // I ⊆ J as sets of members
      const bool gen_incl = subset_of(filter_from_ideal(a, j).generator,
                                      filter_from_ideal(a, i).generator);
      if (incl != gen_incl) {
        cex = witness({{"detail", "inclusion alignment failed"}});
        return CheckStatus::fail;
      }
    }
  // the zero ideal corresponds to {X}
  const Ideal zero{a.ground.universe()};
  if (!is_zero_ideal(a, zero) ||
      filter_from_ideal(a, zero).generator != a.ground.universe()) {
    cex = witness({{"detail", "zero ideal does not map to the trivial filter"}});
    return CheckStatus::fail;
  }
  return CheckStatus::pass;
}

inline CheckStatus ideal_base_minimal(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  if (a.dim() > 10) return CheckStatus::skipped;
  for (const Ideal& i : all_ideals(a)) {
    const SetFamily base = ideal_base(a, i);
    if (base.sets.front() != i.vanishing) {
      cex = witness({{"vanishing", a.ground.format_subset(i.vanishing)}});
      return CheckStatus::fail;
    }
    for (Mask s : base.sets) {
      // every base set is a level set X(f, 1/2) of an actual ideal member
      const Func f = func_const(a.size(), Complex(1)) - indicator(s, a.size());
      if (!a.partition.is_saturated(s) || !subset_of(i.vanishing, s) ||
          !ideal_contains(a, i, f) || level_set(f, Rat(1, 2)) != s) {
        cex = witness({{"set", a.ground.format_subset(s)}});
        return CheckStatus::fail;
      }
    }
    const std::size_t expected =
        std::size_t{1} << (a.dim() - vanishing_blocks(a, i).size());
    if (base.sets.size() != expected) {
      cex = witness({{"count", base.sets.size()}, {"expected", expected}});
      return CheckStatus::fail;
    }
  }
  return CheckStatus::pass;
}

inline CheckStatus ideals_inside_F0(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  if (a.dim() > 12) return CheckStatus::skipped;
  for (const Ideal& i : all_ideals(a)) {
    // the extreme member vanishing exactly on the vanishing set, plus scaled
    // and conjugated representatives
    const Func f = func_const(a.size(), Complex(1)) - indicator(i.vanishing, a.size());
    for (const Func& rep :
         {f, scale(Complex(Rat(-3, 2), Rat(1, 2)), f), f * f}) {
      if (!ideal_contains(a, i, rep) || !in_F0(rep)) {
        cex = witness({{"vanishing", a.ground.format_subset(i.vanishing)}});
        return CheckStatus::fail;
      }
    }
  }
  return CheckStatus::pass;
}

inline CheckStatus ideal_three_conditions(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  if (a.dim() > 10) return CheckStatus::skipped;
  for (const Ideal& i : all_ideals(a)) {
    std::vector<Func> samples = {
        func_const(a.size(), Complex(0)), func_const(a.size(), Complex(1)),
        func_const(a.size(), Complex(1)) - indicator(i.vanishing, a.size())};
    if (a.dim() >= 2)
      samples.push_back(indicator(a.partition.blocks[0], a.size()));
    for (const Func& f : samples) {
      const auto three = three_cond_check(c.space, i, f);  // agreement asserted inside
      const bool expected = ideal_contains(a, i, f);
      if (three[0] != expected) {
        cex = witness({{"vanishing", a.ground.format_subset(i.vanishing)}});
        return CheckStatus::fail;
      }
    }
  }
  return CheckStatus::pass;
}

inline CheckStatus truncation_properties(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  for (const Func& f : member_sample(a)) {
    const Func k = k_truncation(f);
    if (zero_set(k) != zero_set(f) || (contains(a, f) && !contains(a, k))) {
      cex = witness({{"detail", "truncation zero set or membership failed"}});
      return CheckStatus::fail;
    }
    for (int x = 0; x < a.size(); ++x) {
      if (!k[x].is_real() || k[x].re < 0 || k[x].re > 1) {
        cex = witness({{"detail", "truncation out of [0,1]"}});
        return CheckStatus::fail;
      }
      if (f[x].abs_sq() >= 1 && k[x].re != 1) {
        cex = witness({{"detail", "truncation not 1 where |f| >= 1"}});
        return CheckStatus::fail;
      }
    }
  }
  // the approximation step: with h twice the indicator off the vanishing set,
  // k_truncation(h) leaves f unchanged off V, so |f - f k| peaks on V
  for (const Ideal& i : all_ideals(a)) {
    const Func h = scale(Complex(2), func_const(a.size(), Complex(1)) -
                                         indicator(i.vanishing, a.size()));
    const Func k = k_truncation(h);
    if (level_set(h, Rat(1)) != i.vanishing) {
      cex = witness({{"detail", "auxiliary level set mismatch"}});
      return CheckStatus::fail;
    }
    for (const Func& f : member_sample(a)) {
      if (!f.is_real() || !contains(a, f)) continue;
      Rat r = 0;  // sup of |f| over the vanishing set
      for_each_bit(i.vanishing, [&](int x) {
        Rat v = f[x].re < 0 ? -f[x].re : f[x].re;
        r = std::max(r, v);
      });
      if (r == 0) continue;
      Rat err = 0;  // ||f - f k||
      const Func fk = f * k;
      for (int x = 0; x < a.size(); ++x) {
        Rat d = f[x].re - fk[x].re;
        if (d < 0) d = -d;
        err = std::max(err, d);
      }
      if (err > r) {
        cex = witness({{"detail", "truncation approximation bound failed"},
                       {"err", format_rat(err)},
                       {"r", format_rat(r)}});
        return CheckStatus::fail;
      }
    }
  }
  return CheckStatus::pass;
}

inline CheckStatus characters_count_bijection(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  if (a.dim() > 16) return CheckStatus::skipped;
  const auto chars = characters(a);
  const auto homeo = spectrum_homeo(a);
  const auto maxi = maximal_ideals(a);
  bool ok = static_cast<int>(chars.size()) == a.dim() &&
            static_cast<int>(maxi.size()) == a.dim() && homeo.size() == chars.size();
  // each character is evaluation at its block; the point evaluations all occur
  for (std::size_t k = 0; k < chars.size() && ok; ++k)
    for (const auto& [name, g] : a.generators)
      ok = ok && apply_character(a, chars[k], g) == block_value(a, g, chars[k].block);
  for (int x = 0; x < a.size() && ok; ++x) {
    bool found = false;
    for (const Character& chi : chars)
      if (chi.block == a.partition.block_of[x]) found = true;
    ok = found;
    for (const auto& [name, g] : a.generators)
      ok = ok && apply_character(a, Character{a.partition.block_of[x]}, g) == g[x];
  }
  if (!ok) {
    cex = witness({{"characters", chars.size()}, {"blocks", a.dim()}});
    return CheckStatus::fail;
  }
  return CheckStatus::pass;
}

inline CheckStatus maximal_ideal_intersection_law(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  if (a.dim() > 12) return CheckStatus::skipped;
  for (const Ideal& i : all_ideals(a))
    if (!maximal_ideal_intersection(a, i)) {
      cex = witness({{"vanishing", a.ground.format_subset(i.vanishing)}});
      return CheckStatus::fail;
    }
  return CheckStatus::pass;
}

// coarse algebra derived from the instance: generator value = block index / k
inline Algebra derived_coarse(const Algebra& a, int k) {
  std::vector<Complex> vals;
  for (int b = 0; b < a.dim(); ++b) vals.push_back(Complex(b / k));
  return make_algebra(a.ground, {{"coarse", func_from_block_values(a, vals)}});
}

inline CheckStatus subalgebra_recognition(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  const Algebra coarse = derived_coarse(a, 2);
  bool ok = is_subalgebra(coarse, a) && is_subalgebra(a, a) &&
            is_subalgebra(coarse, coarse);
  if (coarse.dim() < a.dim())  // proper inclusion cannot reverse
    ok = ok && !is_subalgebra(a, coarse);
  if (!ok) {
    cex = witness({{"detail", "subalgebra recognition failed"}});
    return CheckStatus::fail;
  }
  return CheckStatus::pass;
}

inline CheckStatus quotient_map_factorization(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  const AlgebraPair pair = make_algebra_pair(derived_coarse(a, 2), a);
  const std::vector<int> qmap = quotient_map(pair);  // surjectivity checked inside
  // fibers partition the fine spectrum and consist of the nested blocks
  for (int q = 0; q < pair.coarse.dim(); ++q) {
    Mask fiber = 0;
    for (int p = 0; p < pair.fine.dim(); ++p)
      if (qmap[p] == q) fiber |= bit(p);
    for (int p = 0; p < pair.fine.dim(); ++p) {
      const bool nested =
          subset_of(pair.fine.partition.blocks[p], pair.coarse.partition.blocks[q]);
      if (((fiber >> p) & 1) != static_cast<Mask>(nested)) {
        cex = witness({{"coarse_point", q}});
        return CheckStatus::fail;
      }
    }
  }
  return CheckStatus::pass;
}

inline CheckStatus quotient_point_equivalences(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  const AlgebraPair pair = make_algebra_pair(derived_coarse(a, 2), a);
  const std::vector<int> qmap = quotient_map(pair);
  for (int p = 0; p < pair.fine.dim(); ++p)
    for (int q = 0; q < pair.coarse.dim(); ++q) {
      const auto three = surjpts_check(pair, p, q);  // agreement asserted inside
      if (three[0] != (qmap[p] == q)) {
        cex = witness({{"fine_point", p}, {"coarse_point", q}});
        return CheckStatus::fail;
      }
    }
  return CheckStatus::pass;
}

inline CheckStatus quotient_space_homeomorphic(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  for (int k : {1, 2, a.dim()}) {
    const AlgebraPair pair = make_algebra_pair(derived_coarse(a, k), a);
    if (!quotient_space_check(pair)) {
      cex = witness({{"merge", k}});
      return CheckStatus::fail;
    }
  }
  return CheckStatus::pass;
}

inline CheckStatus quotient_composition_transitive(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  const Algebra mid = derived_coarse(a, 2);
  const Algebra low = derived_coarse(a, 4);
  const auto q32 = quotient_map(make_algebra_pair(mid, a));
  const auto q21 = quotient_map(make_algebra_pair(low, mid));
  const auto q31 = quotient_map(make_algebra_pair(low, a));
  for (int p = 0; p < a.dim(); ++p)
    if (q31[p] != q21[q32[p]]) {
      cex = witness({{"fine_point", p}});
      return CheckStatus::fail;
    }
  return CheckStatus::pass;
}

inline CheckStatus embedding_stone_weierstrass(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  const bool emb = embedding_check(a);       // internal agreement asserted
  const bool sw = stone_weierstrass_check(a);
  bool ok = emb == (a.dim() == a.size()) && sw == (a.dim() == a.size());
  ok = ok && gelfand_naimark_check(a, a);
  const Algebra coarse = derived_coarse(a, 2);
  ok = ok && gelfand_naimark_check(a, coarse) == (a.dim() == coarse.dim());
  if (!ok) {
    cex = witness({{"detail", "embedding / density criteria failed"}});
    return CheckStatus::fail;
  }
  return CheckStatus::pass;
}

inline CheckStatus oracle_filter_enumeration_agreement(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  if (a.size() > 4) return CheckStatus::skipped;
  const auto full = oracle::enumerate_all_filters(a.ground);
  std::vector<std::vector<Mask>> brute;  // member lists of brute F-filters
  for (const auto& ff : full)
    if (oracle::brute_F_family(a, oracle::to_family(ff)))
      brute.push_back(ff.member_sets);
  std::vector<std::vector<Mask>> fast;
  for (const FFilter& phi : enumerate_F_filters(a))
    fast.push_back(filter_members(a.size(), phi.generator));
  std::sort(brute.begin(), brute.end());
  std::sort(fast.begin(), fast.end());
  if (brute != fast) {
    cex = witness({{"brute", brute.size()}, {"fast", fast.size()}});
    return CheckStatus::fail;
  }
  return CheckStatus::pass;
}

inline CheckStatus oracle_subalgebra_membership_agreement(const VerifyContext& c, Json& cex) {
  const Algebra& a = c.alg;
  if (a.size() > 4) return CheckStatus::skipped;
  std::vector<Func> gens;
  for (const auto& [name, g] : a.generators) gens.push_back(g);
  const auto span = oracle::brute_subalgebra_closure(a.ground, gens);
  // exhaustive over functions with values in {0,1,2}
  const int n = a.size();
  std::vector<int> digit(n, 0);
  bool done = false;
  while (!done) {
    Func f;
    for (int x = 0; x < n; ++x) f.values.push_back(Complex(digit[x]));
    if (span.contains(f) != contains(a, f)) {
      Json vals = Json::array();
      for (const auto& v : f.values) vals.push_back(format_complex(v));
      cex = witness({{"function", vals}});
      return CheckStatus::fail;
    }
    int pos = 0;
    while (pos < n && ++digit[pos] == 3) digit[pos++] = 0;
    done = pos == n;
  }
  if (span.dim() != a.dim()) {
    cex = witness({{"span_dim", span.dim()}, {"blocks", a.dim()}});
    return CheckStatus::fail;
  }
  return CheckStatus::pass;
}

}  // namespace checks

inline const std::vector<std::pair<std::string, checks::CheckFn>>& check_registry() {
  using namespace checks;
  static const std::vector<std::pair<std::string, CheckFn>> reg = {
      {"kernel_partition_idempotent", kernel_partition_idempotent},
      {"algebra_membership_basics", algebra_membership_basics},
      {"inverse_roundtrip", inverse_roundtrip},
      {"f0_threshold_agreement", f0_threshold_agreement},
      {"lattice_laws", lattice_laws},
      {"level_set_monotone_zero_limit", level_set_monotone_zero_limit},
      {"filter_enumeration_counts", filter_enumeration_counts},
      {"zero_set_filter_base", zero_set_filter_base},
      {"f_family_fast_vs_witness_search", f_family_fast_vs_witness_search},
      {"ultrafilter_five_equivalences", ultrafilter_five_equivalences},
      {"extend_to_ultrafilter_laws", extend_to_ultrafilter_laws},
      {"interior_membership_equivalence", interior_membership_equivalence},
      {"evaluation_map_wellformed", evaluation_map_wellformed},
      {"closed_set_filter_bijection", closed_set_filter_bijection},
      {"extension_restriction_identity", extension_restriction_identity},
      {"extension_star_isomorphism", extension_star_isomorphism},
      {"rset_membership", rset_membership},
      {"approximation_within_radius", approximation_within_radius},
      {"dense_image_factorization_laws", dense_image_factorization_laws},
      {"ideal_filter_galois_bijection", ideal_filter_galois_bijection},
      {"ideal_base_minimal", ideal_base_minimal},
      {"ideals_inside_F0", ideals_inside_F0},
      {"ideal_three_conditions", ideal_three_conditions},
      {"truncation_properties", truncation_properties},
      {"characters_count_bijection", characters_count_bijection},
      {"maximal_ideal_intersection_law", maximal_ideal_intersection_law},
      {"subalgebra_recognition", subalgebra_recognition},
      {"quotient_map_factorization", quotient_map_factorization},
      {"quotient_point_equivalences", quotient_point_equivalences},
      {"quotient_space_homeomorphic", quotient_space_homeomorphic},
      {"quotient_composition_transitive", quotient_composition_transitive},
      {"embedding_stone_weierstrass", embedding_stone_weierstrass},
      {"oracle_filter_enumeration_agreement", oracle_filter_enumeration_agreement},
      {"oracle_subalgebra_membership_agreement", oracle_subalgebra_membership_agreement},
  };
  return reg;
}

inline const std::vector<std::string>& space_law_names() {
  static const std::vector<std::string> names = {
      "hausdorff_separation",      "compactness_finite_cover",
      "evaluation_image_dense",    "filter_hat_intersection",
      "filter_recovered_from_closure", "filter_inclusion_reverses_closures",
      "hat_complement_and_open_closures", "hat_determined_by_interior",
      "closure_intersection_criterion"};
  return names;
}

/// Runs every implemented law on one instance; the spectrum laws come from
/// verify_space and appear under a space_ prefix.
inline std::vector<CheckResult> run_instance_checks(const VerifyContext& ctx) {
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : check_registry()) {
    CheckResult res;
    res.theorem = name;
    try {
      Json cex;
      res.status = fn(ctx, cex);
      if (res.status == CheckStatus::fail) {
        cex["instance"] = instance_to_json(ctx.inst);
        cex["instance_digest"] = ctx.digest;
        res.counterexample = std::move(cex);
      }
    } catch (const std::exception& e) {
      res.status = CheckStatus::fail;
      res.counterexample = checks::witness({{"error", std::string(e.what())}});
      res.counterexample["instance"] = instance_to_json(ctx.inst);
      res.counterexample["instance_digest"] = ctx.digest;
    }
    out.push_back(std::move(res));
  }

  if (ctx.alg.size() <= 12) {
    const Report rep = verify_space(ctx.space);
    std::map<std::string, CheckItem> by_name;
    for (const CheckItem& it : rep.items) by_name[it.name] = it;
    for (const std::string& name : space_law_names()) {
      CheckResult res;
      res.theorem = "space_" + name;
      const auto it = by_name.find(name);
      ensure(it != by_name.end(), "space law missing from the report");
      res.status = it->second.status;
      if (res.status == CheckStatus::fail) {
        res.counterexample = checks::witness({{"detail", it->second.detail}});
        res.counterexample["instance"] = instance_to_json(ctx.inst);
        res.counterexample["instance_digest"] = ctx.digest;
      }
      out.push_back(std::move(res));
    }
  } else {
    for (const std::string& name : space_law_names())
      out.push_back({"space_" + name, CheckStatus::skipped, Json()});
  }
  return out;
}

inline CheckResult run_single_check(const std::string& theorem, const VerifyContext& ctx) {
  for (const CheckResult& res : run_instance_checks(ctx))
    if (res.theorem == theorem) return res;
  throw std::invalid_argument("no such theorem: '" + theorem + "'");
}

struct VerifyReport {
  bool random_mode = false;
  std::uint64_t seed = 0;
  int trials = 0;
  int max_size = 0;
  std::string instance_digest;
  std::vector<CheckResult> entries;

  bool all_pass() const {
    for (const auto& e : entries)
      if (e.status == CheckStatus::fail) return false;
    return true;
  }

  Json to_json() const {
    Json j;
    j["mode"] = random_mode ? "random" : "instance";
    if (random_mode) {
      j["seed"] = seed;
      j["trials"] = trials;
      j["max_size"] = max_size;
    }
    j["instance_digest"] = instance_digest;
    Json results = Json::array();
    for (const auto& e : entries) {
      Json r;
      r["theorem"] = e.theorem;
      r["status"] = to_string(e.status);
      if (e.status == CheckStatus::fail) r["counterexample"] = e.counterexample;
      results.push_back(std::move(r));
    }
    j["results"] = std::move(results);
    j["all_pass"] = all_pass();
    return j;
  }

  std::string to_human() const {
    std::string out;
    std::size_t width = 0;
    for (const auto& e : entries) width = std::max(width, e.theorem.size());
    for (const auto& e : entries) {
      std::string line = e.theorem;
      line.resize(width + 2, ' ');
      line += to_string(e.status);
      if (e.status == CheckStatus::fail && e.counterexample.contains("detail"))
        line += "  " + e.counterexample["detail"].get<std::string>();
      out += line + "\n";
    }
    int pass = 0, fail = 0, skip = 0;
    for (const auto& e : entries) {
      if (e.status == CheckStatus::pass) ++pass;
      if (e.status == CheckStatus::fail) ++fail;
      if (e.status == CheckStatus::skipped) ++skip;
    }
    out += std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " +
           std::to_string(skip) + " skipped\n";
    return out;
  }
};

inline VerifyReport verify_instance(const InstanceFile& inst) {
  VerifyReport rep;
  const VerifyContext ctx = make_context(inst);
  rep.instance_digest = ctx.digest;
  rep.entries = run_instance_checks(ctx);
  return rep;
}

/// Seeded random verification: trial i uses the i-th draw of a splitmix64
/// stream as its instance seed. Entries are merged per theorem (a failure
/// anywhere fails the theorem); the first failing trial supplies the
/// replayable counterexample, tagged with its trial index and seed.
inline VerifyReport verify_random(std::uint64_t seed, int trials, int max_size) {
  require(trials >= 1, "at least one trial required");
  VerifyReport rep;
  rep.random_mode = true;
  rep.seed = seed;
  rep.trials = trials;
  rep.max_size = max_size;

  std::map<std::string, CheckResult> merged;
  std::vector<std::string> order;
  SplitMix64 stream(seed);
  std::string digest_acc;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = stream.next();
    const InstanceFile inst = random_instance(trial_seed, max_size);
    const VerifyContext ctx = make_context(inst);
    digest_acc += ctx.digest;
    for (CheckResult& res : run_instance_checks(ctx)) {
      if (!merged.count(res.theorem)) {
        order.push_back(res.theorem);
        merged[res.theorem] = CheckResult{res.theorem, CheckStatus::skipped, Json()};
      }
      CheckResult& acc = merged[res.theorem];
      if (res.status == CheckStatus::fail && acc.status != CheckStatus::fail) {
        acc.status = CheckStatus::fail;
        res.counterexample["trial"] = t;
        res.counterexample["trial_seed"] = trial_seed;
        acc.counterexample = std::move(res.counterexample);
      } else if (res.status == CheckStatus::pass && acc.status == CheckStatus::skipped) {
        acc.status = CheckStatus::pass;
      }
    }
  }
  rep.instance_digest = hex64(fnv1a64(digest_acc));
  for (const std::string& name : order) rep.entries.push_back(merged[name]);
  return rep;
}

}  // namespace ffc
