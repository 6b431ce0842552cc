#include "abext/theorems.hpp"

#include "abext/duality.hpp"
#include "abext/oracle.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace abext {

namespace {

using Check = std::optional<std::string>;

struct Suite {
  const char *name;
  const char *label;
  std::function<std::vector<Json>(Rng &, const SuiteConfig &)> cases;
  std::function<Check(const Json &)> check;
};

// Repeats `draw` once per trial.
std::function<std::vector<Json>(Rng &, const SuiteConfig &)>
per_trial(std::function<Json(Rng &, const SampleBounds &)> draw) {
  return [draw](Rng &rng, const SuiteConfig &cfg) {
    std::vector<Json> out;
    for (int t = 0; t < cfg.trials; ++t)
      out.push_back(draw(rng, cfg.bounds));
    return out;
  };
}

Json pair_case(const FgGroup &c, const FgGroup &a) {
  return {{"C", to_json(c)}, {"A", to_json(a)}};
}

Json extension_case(const Extension &e) { return {{"extension", to_json(e)}}; }

Extension case_extension(const Json &j, const char *key = "extension") {
  return extension_from_json(j.at(key));
}

FgGroup case_group(const Json &j, const char *key) {
  return group_from_json(j.at(key));
}

FgGroup direct_sum_group(const FgGroup &g, const FgGroup &h) {
  return direct_sum(g, h).group;
}

// Component coordinates of an Ext group presented as a canonical group.
Presentation component_presentation(const ExtGroup &g) {
  IntMatrix rel = IntMatrix::Zero(g.size(), g.size());
  for (Index k = 0; k < g.size(); ++k)
    rel(k, k) = g.components()[static_cast<std::size_t>(k)].order;
  return present(g.size(), rel);
}

Morphism as_morphism(const ExtHom &h) {
  auto src = component_presentation(h.source);
  auto dst = component_presentation(h.target);
  return Morphism(src.group, dst.group,
                  dst.projection.matrix() * h.matrix * src.lift);
}

// Ext_t(C, A) as a subgroup of the canonical form of Ext(C, A).
Subgroup ext_t_as_subgroup(const ExtTSubgroup &t) {
  auto p = component_presentation(t.parent());
  IntMatrix gens(p.group.generator_count(), static_cast<Index>(t.members().size()));
  for (std::size_t k = 0; k < t.members().size(); ++k)
    gens.col(static_cast<Index>(k)) = p.projection.matrix().col(t.members()[k]);
  return generated_subgroup(p.group, gens);
}

bool same_subgroup(const Morphism &f, const Morphism &g) {
  return image_contained(f, g) && image_contained(g, f);
}

// tB / t(phi(A)) and t(B / phi(A)).
std::pair<FgGroup, FgGroup> purity_quotients(const Extension &e) {
  Morphism t_phi = restrict_to_torsion(e.phi());
  FgGroup left = cokernel(t_phi).group;
  FgGroup right = torsion_subgroup(cokernel(e.phi()).group).group;
  return {left, right};
}

// ------------------------------------------------------------------ suites

Check pushout_pullback(const Json &j) {
  Extension e = case_extension(j);
  Morphism mu = morphism_from_json(j.at("mu"));
  Morphism gamma = morphism_from_json(j.at("gamma"));
  if (!is_t_extension(e))
    return "input extension is not a t-extension";
  Extension p = pushout(e, mu);
  if (!is_t_extension(p))
    return "pushout along mu is not a t-extension";
  Extension q = pullback(e, gamma);
  if (!is_t_extension(q))
    return "pullback along gamma is not a t-extension";
  if (!(classify(p) == induced_pushforward(mu, e.C())(classify(e))))
    return "class of the pushout differs from mu_* of the class";
  if (!(classify(q) == induced_pullback(gamma, e.A())(classify(e))))
    return "class of the pullback differs from gamma^* of the class";
  return std::nullopt;
}

Json draw_pushout_pullback(Rng &rng, const SampleBounds &b) {
  FgGroup c = random_group(rng, b), a = random_group(rng, b);
  Extension e = random_realization(rng, random_t_element(rng, ext_t_subgroup(c, a)));
  Morphism mu = random_morphism(rng, a, random_group(rng, b));
  Morphism gamma = random_morphism(rng, random_group(rng, b), c);
  return {{"extension", to_json(e)}, {"mu", to_json(mu)}, {"gamma", to_json(gamma)}};
}

Check equivalence_invariance(const Json &j) {
  Extension e1 = case_extension(j, "first");
  Extension e2 = case_extension(j, "second");
  if (!are_equivalent(e1, e2))
    return "inputs are not equivalent";
  if (is_torsion(e1.B()) && *order(e1.B()) <= oracle::Caps{}.max_middle_order &&
      !oracle::oracle_equivalent(e1, e2))
    return "no isomorphism of middles commutes with both maps";
  const bool t1 = is_t_extension(e1);
  if (t1 != is_t_extension(e2))
    return "equivalent extensions disagree on the t-extension property";
  if (t1 != ext_t_subgroup(e1.C(), e1.A()).contains(classify(e1)))
    return "t-extension property disagrees with membership in Ext_t";
  return std::nullopt;
}

Json draw_equivalence_invariance(Rng &rng, const SampleBounds &b) {
  const bool small = uniform(rng, 0, 1) == 0;
  FgGroup c = small ? random_finite_group(rng, 8, b) : random_group(rng, b);
  FgGroup a = small ? random_finite_group(rng, 8, b) : random_group(rng, b);
  ExtElement x = random_element(rng, ext_group(c, a));
  return {{"first", to_json(random_realization(rng, x))},
          {"second", to_json(random_realization(rng, x))}};
}

Check direct_sum_check(const Json &j) {
  Extension e1 = case_extension(j, "first");
  Extension e2 = case_extension(j, "second");
  if (!is_t_extension(e1) || !is_t_extension(e2))
    return "inputs are not both t-extensions";
  if (!is_t_extension(direct_sum_ext(e1, e2)))
    return "direct sum of t-extensions is not a t-extension";
  return std::nullopt;
}

Json draw_direct_sum(Rng &rng, const SampleBounds &b) {
  Json out;
  for (const char *key : {"first", "second"}) {
    FgGroup c = random_group(rng, b), a = random_group(rng, b);
    out[key] = to_json(random_realization(rng, random_t_element(rng, ext_t_subgroup(c, a))));
  }
  return out;
}

Check baer_sum_check(const Json &j) {
  Extension e1 = case_extension(j, "first");
  Extension e2 = case_extension(j, "second");
  ExtElement x = classify(e1), y = classify(e2);
  Extension s = baer_sum(e1, e2);
  if (!(classify(s) == x + y))
    return "class of the Baer sum is not the sum of the classes";
  if (!(classify(baer_sum_pushout_first(e1, e2)) == x + y))
    return "pushout-first Baer sum disagrees";
  if (is_t_extension(e1) && is_t_extension(e2) && !is_t_extension(s))
    return "Baer sum of t-extensions is not a t-extension";
  if (!are_equivalent(baer_sum(e1, split_extension(e1.C(), e1.A())), e1))
    return "split extension is not neutral";
  if (!splits(baer_sum(e1, realize(-x))))
    return "Baer sum with the inverse class does not split";
  return std::nullopt;
}

Json draw_baer_sum(Rng &rng, const SampleBounds &b) {
  FgGroup c = random_group(rng, b), a = random_group(rng, b);
  ExtGroup g = ext_group(c, a);
  ExtTSubgroup t(g);
  auto pick = [&] {
    return uniform(rng, 0, 1) == 0 ? random_t_element(rng, t) : random_element(rng, g);
  };
  ExtElement x = pick(), y = pick();
  return {{"first", to_json(random_realization(rng, x))},
          {"second", to_json(random_realization(rng, y))}};
}

Check pure_is_t(const Json &j) {
  Extension e = case_extension(j);
  if (!is_pure_extension(e))
    return std::nullopt;
  if (!is_t_extension(e))
    return "pure extension is not a t-extension";
  auto [left, right] = purity_quotients(e);
  if (!(left == right))
    return "tB/t(phi A) = " + to_string(left) + " but t(B/phi A) = " + to_string(right);
  if (!pext_certificate_holds(e))
    return "pure extension does not split";
  return std::nullopt;
}

Json draw_pure_is_t(Rng &rng, const SampleBounds &b) {
  FgGroup c = random_group(rng, b), a = random_group(rng, b);
  ExtGroup g = ext_group(c, a);
  ExtElement x = uniform(rng, 0, 1) == 0 ? ExtElement::zero(g) : random_element(rng, g);
  return extension_case(random_realization(rng, x));
}

Check pext_vanishes(const Json &j) {
  Extension e = case_extension(j);
  if (!is_torsion(e.C()) || !is_torsion_free(e.A()))
    return "input needs torsion C and torsion-free A";
  if (!pext_group(e.C(), e.A()).structure().is_trivial())
    return "Pext is not trivial";
  const bool pure = is_pure_extension(e);
  if (pure && !splits(e))
    return "pure extension does not split";
  if (pure != classify(e).is_zero())
    return "purity disagrees with the zero class";
  return std::nullopt;
}

Json draw_pext_vanishes(Rng &rng, const SampleBounds &b) {
  FgGroup c = random_torsion_group(rng, b), a = random_free_group(rng, b);
  ExtGroup g = ext_group(c, a);
  ExtElement x = uniform(rng, 0, 1) == 0 ? ExtElement::zero(g) : random_element(rng, g);
  return extension_case(random_realization(rng, x));
}

Check pext_ext_coincide(const Json &j) {
  FgGroup c = case_group(j, "C"), a = case_group(j, "A");
  if (!is_torsion_free(c) && !is_divisible(a))
    return "input needs torsion-free C or divisible A";
  FgGroup ext = ext_group(c, a).structure();
  FgGroup ext_t = ext_t_subgroup(c, a).structure();
  FgGroup pext = pext_group(c, a).structure();
  if (!(ext == ext_t) || !(ext_t == pext))
    return "Pext = " + to_string(pext) + ", Ext_t = " + to_string(ext_t) +
           ", Ext = " + to_string(ext);
  return std::nullopt;
}

Json draw_pext_ext_coincide(Rng &rng, const SampleBounds &b) {
  if (uniform(rng, 0, 1) == 0)
    return pair_case(random_free_group(rng, b), random_group(rng, b));
  return pair_case(random_group(rng, b), FgGroup::trivial());
}

Check torsion_free_splitting(const Json &j) {
  Extension e = case_extension(j);
  if (!is_torsion(e.C()) || !is_torsion_free(e.A()))
    return "input needs torsion C and torsion-free A";
  const bool t = is_t_extension(e);
  if (t != classify(e).is_zero())
    return "t-extension property differs from being the zero class";
  if (!t)
    return std::nullopt;
  if (!splits(e))
    return "t-extension does not split";
  Subgroup tb = torsion_subgroup(e.B());
  Subgroup phi_a = image(e.phi());
  if (!(direct_sum_group(phi_a.group, tb.group) == e.B()))
    return "B is not isomorphic to phi(A) + tB";
  auto sum = direct_sum(e.A(), tb.group);
  Morphism inner = compose(e.phi(), sum.project_first) +
                   compose(tb.inclusion, sum.project_second);
  if (!is_isomorphism(inner))
    return "phi(A) and tB do not form an internal direct sum";
  return std::nullopt;
}

Json draw_torsion_free_splitting(Rng &rng, const SampleBounds &b) {
  FgGroup c = random_finite_group(rng, 12, b);
  FgGroup a = FgGroup::free(uniform(rng, 0, 2));
  ExtGroup g = ext_group(c, a);
  ExtElement x = uniform(rng, 0, 2) == 0 ? ExtElement::zero(g) : random_element(rng, g);
  return extension_case(random_realization(rng, x));
}

Check finite_all_t(const Json &j) {
  Extension e = case_extension(j);
  if (!is_torsion(e.C()) || !is_torsion(e.A()))
    return "input needs torsion A and C";
  if (!is_t_extension(e))
    return "extension of torsion groups is not a t-extension";
  if (!(ext_t_subgroup(e.C(), e.A()).structure() == ext_group(e.C(), e.A()).structure()))
    return "Ext_t differs from Ext";
  return std::nullopt;
}

Json draw_finite_all_t(Rng &rng, const SampleBounds &b) {
  FgGroup c = random_torsion_group(rng, b), a = random_torsion_group(rng, b);
  return extension_case(random_realization(rng, random_element(rng, ext_group(c, a))));
}

Check ext_t_via_torsion(const Json &j) {
  FgGroup c = case_group(j, "C"), a = case_group(j, "A");
  if (!is_torsion(c))
    return "input needs torsion C";
  ExtTSubgroup t = ext_t_subgroup(c, a);
  FgGroup via = ext_t_from_torsion_target(c, a);
  if (!(via == t.structure()))
    return "Ext(C, tA) = " + to_string(via) + " but Ext_t(C, A) = " + to_string(t.structure());
  // i_* : Ext(C, tA) -> Ext(C, A) is injective with image Ext_t(C, A).
  Morphism i_star = as_morphism(induced_pushforward(torsion_subgroup(a).inclusion, c));
  if (!is_injective(i_star))
    return "Ext(C, tA) -> Ext(C, A) is not injective";
  if (!same_subgroup(image(i_star).inclusion, ext_t_as_subgroup(t).inclusion))
    return "image of Ext(C, tA) in Ext(C, A) differs from Ext_t(C, A)";
  return std::nullopt;
}

Json draw_ext_t_via_torsion(Rng &rng, const SampleBounds &b) {
  return pair_case(random_torsion_group(rng, b), random_group(rng, b));
}

Check cyclic_ext_t(const Json &j) {
  Integer m = integer_from_json(j.at("m"));
  FgGroup a = case_group(j, "A");
  FgGroup lhs = ext_t_subgroup(FgGroup::cyclic(m), a).structure();
  FgGroup ta = torsion_subgroup(a).group;
  FgGroup rhs = cokernel(Morphism::scalar(ta, m)).group;
  if (!(lhs == rhs))
    return "Ext_t(Z/m, A) = " + to_string(lhs) + " but tA/m tA = " + to_string(rhs);
  return std::nullopt;
}

Json draw_cyclic_ext_t(Rng &rng, const SampleBounds &b) {
  return {{"m", uniform(rng, 2, 30)}, {"A", to_json(random_group(rng, b))}};
}

Check product_additivity(const Json &j) {
  FgGroup c = case_group(j, "C");
  FgGroup a1 = case_group(j, "A1"), a2 = case_group(j, "A2");
  if (!is_torsion(c))
    return "input needs torsion C";
  FgGroup lhs = ext_t_subgroup(c, direct_sum_group(a1, a2)).structure();
  FgGroup rhs = direct_sum_group(ext_t_subgroup(c, a1).structure(),
                                 ext_t_subgroup(c, a2).structure());
  if (!(lhs == rhs))
    return "Ext_t(C, A1 + A2) = " + to_string(lhs) + " but the product is " + to_string(rhs);
  return std::nullopt;
}

Json draw_product_additivity(Rng &rng, const SampleBounds &b) {
  return {{"C", to_json(random_torsion_group(rng, b))},
          {"A1", to_json(random_group(rng, b))},
          {"A2", to_json(random_group(rng, b))}};
}

Check ext_t_via_free_quotient(const Json &j) {
  FgGroup c = case_group(j, "C"), a = case_group(j, "A");
  if (!is_torsion_free(a))
    return "input needs torsion-free A";
  FgGroup lhs = ext_t_from_free_quotient(c, a);
  FgGroup direct = ext_group(cokernel(torsion_subgroup(c).inclusion).group, a).structure();
  FgGroup t = ext_t_subgroup(c, a).structure();
  if (!(lhs == t) || !(direct == t))
    return "Ext(C/tC, A) = " + to_string(direct) + " but Ext_t(C, A) = " + to_string(t);
  return std::nullopt;
}

Json draw_ext_t_via_free_quotient(Rng &rng, const SampleBounds &b) {
  return pair_case(random_group(rng, b), random_free_group(rng, b));
}

// A nonzero t-class realized as a t-extension that does not split.
Check obstruction_is_valid(const std::optional<ExtElement> &w) {
  if (!w || w->is_zero())
    return "no nonzero witness produced";
  if (!ext_t_subgroup(w->parent().C(), w->parent().A()).contains(*w))
    return "witness is not in Ext_t";
  Extension e = realize(*w);
  if (!is_t_extension(e) || splits(e))
    return "realized witness is not a non-split t-extension";
  return std::nullopt;
}

Check t_projective(const Json &j) {
  FgGroup c = case_group(j, "C"), a = case_group(j, "A");
  if (fg_t_projective(c) != is_free(c))
    return "t-projectivity disagrees with freeness";
  if (is_free(c)) {
    if (!ext_t_subgroup(c, a).is_trivial())
      return "free C has nonzero Ext_t";
    return std::nullopt;
  }
  return obstruction_is_valid(t_projectivity_obstruction(c));
}

Check t_injective_fg(const Json &j) {
  FgGroup c = case_group(j, "C"), a = case_group(j, "A");
  if (fg_t_injective_witness(a) != is_torsion_free(a))
    return "t-injectivity disagrees with torsion-freeness";
  if (is_torsion_free(a)) {
    if (!ext_t_subgroup(c, a).is_trivial())
      return "torsion-free A has nonzero Ext_t";
    return std::nullopt;
  }
  return obstruction_is_valid(t_injectivity_obstruction(a));
}

Json draw_pair(Rng &rng, const SampleBounds &b) {
  return pair_case(random_group(rng, b), random_group(rng, b));
}

Check duality_transport(const Json &j) {
  Extension e = case_extension(j);
  if (!is_torsion(e.B()))
    return "input needs a finite middle group";
  std::optional<Extension> d;
  try {
    d = dual_extension(e);
  } catch (const ExactnessViolation &ex) {
    return std::string("dual sequence is not exact: ") + ex.what();
  }
  if (!dual_group(e.B()).is_nondegenerate())
    return "pairing on B is degenerate";
  if (!is_adjoint(e.phi(), d->psi()) || !is_adjoint(e.psi(), d->phi()))
    return "dual maps fail the pairing identity";
  if (!double_dual_matches(e))
    return "double dual does not match under evaluation";
  if (is_pure_extension(e) != is_pure_extension(*d))
    return "purity is not preserved by duality";
  if (!(ext_group(e.C(), e.A()).structure() == ext_group(d->C(), d->A()).structure()))
    return "Ext(C, A) and Ext(A^, C^) differ";
  if (!(hom_group(e.C(), e.A()) == hom_group(d->C(), d->A())))
    return "Hom(C, A) and Hom(A^, C^) differ";
  return std::nullopt;
}

Json draw_duality_transport(Rng &rng, const SampleBounds &b) {
  FgGroup c = random_finite_group(rng, 8, b);
  const std::int64_t rest = std::max<std::int64_t>(1, b.max_order / order(c)->convert_to<std::int64_t>());
  FgGroup a = random_finite_group(rng, rest, b);
  ExtGroup g = ext_group(c, a);
  ExtElement x = uniform(rng, 0, 2) == 0 ? ExtElement::zero(g) : random_element(rng, g);
  return extension_case(random_realization(rng, x));
}

Check oracle_crosscheck(const Json &j) {
  FgGroup c = case_group(j, "C"), a = case_group(j, "A");
  oracle::ExtensionCensus census(c, a);
  ExtGroup g = ext_group(c, a);
  if (Integer(census.class_count()) != g.cardinality())
    return "oracle finds " + std::to_string(census.class_count()) +
           " classes, Ext has " + g.cardinality().str();
  std::vector<ExtElement> coords;
  std::set<std::vector<std::string>> seen;
  for (const auto &cls : census.classes()) {
    coords.push_back(classify(oracle::cocycle_to_extension(cls.representative)));
    std::vector<std::string> key;
    for (Index k = 0; k < coords.back().coords().size(); ++k)
      key.push_back(coords.back().coords()(k).str());
    seen.insert(std::move(key));
  }
  if (seen.size() != coords.size())
    return "distinct oracle classes share a classification";
  const std::size_t n = coords.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < std::min<std::size_t>(n, 16); ++k)
      if (!(coords[census.add(i, k)] == coords[i] + coords[k]))
        return "classification is not additive on oracle classes";
  ExtTSubgroup t(g);
  std::set<std::size_t> expected;
  for (std::size_t i = 0; i < n; ++i)
    if (t.contains(coords[i]))
      expected.insert(i);
  if (oracle::oracle_t_classes(c, a) != expected)
    return "exhaustive t-classes differ from Ext_t";
  return std::nullopt;
}

std::vector<Json> oracle_cases(Rng &, const SuiteConfig &) {
  std::vector<Json> out;
  auto corpus = small_finite_corpus();
  for (const auto &c : corpus)
    for (const auto &a : corpus)
      out.push_back(pair_case(c, a));
  return out;
}

const std::vector<Suite> &registry() {
  static const std::vector<Suite> suites = {
      {"pushout_pullback", "t-extensions are closed under pushout and pullback",
       per_trial(draw_pushout_pullback), pushout_pullback},
      {"equivalence_invariance", "extensions equivalent to a t-extension are t-extensions",
       per_trial(draw_equivalence_invariance), equivalence_invariance},
      {"direct_sum", "direct sums of t-extensions are t-extensions",
       per_trial(draw_direct_sum), direct_sum_check},
      {"baer_sum", "Baer sum is the group law on classes and preserves t-extensions",
       per_trial(draw_baer_sum), baer_sum_check},
      {"pure_is_t", "pure extensions are t-extensions",
       per_trial(draw_pure_is_t), pure_is_t},
      {"pext_ext_coincide", "Pext = Ext_t = Ext for torsion-free C or divisible A",
       per_trial(draw_pext_ext_coincide), pext_ext_coincide},
      {"torsion_free_splitting", "t-extensions of torsion-free A by torsion C split",
       per_trial(draw_torsion_free_splitting), torsion_free_splitting},
      {"pext_vanishes", "Pext vanishes for torsion C and torsion-free A",
       per_trial(draw_pext_vanishes), pext_vanishes},
      {"finite_all_t", "every extension of torsion groups is a t-extension",
       per_trial(draw_finite_all_t), finite_all_t},
      {"ext_t_via_torsion", "Ext_t(C, A) = Ext(C, tA) for torsion C",
       per_trial(draw_ext_t_via_torsion), ext_t_via_torsion},
      {"cyclic_ext_t", "Ext_t(Z/m, A) = tA/m tA (f.g. specialization)",
       per_trial(draw_cyclic_ext_t), cyclic_ext_t},
      {"product_additivity", "Ext_t commutes with finite products for torsion C",
       per_trial(draw_product_additivity), product_additivity},
      {"ext_t_via_free_quotient", "Ext_t(C, A) = Ext(C/tC, A) for torsion-free A",
       per_trial(draw_ext_t_via_free_quotient), ext_t_via_free_quotient},
      {"t_projective", "t-projective means free (f.g. specialization)",
       per_trial(draw_pair), t_projective},
      {"t_injective_fg", "Ext_t(-, A) = 0 iff A torsion-free (f.g. specialization)",
       per_trial(draw_pair), t_injective_fg},
      {"duality_transport", "duality preserves exactness, purity and Ext (finite specialization)",
       per_trial(draw_duality_transport), duality_transport},
      {"oracle_crosscheck", "Ext and Ext_t agree with cocycle enumeration on small finite groups",
       oracle_cases, oracle_crosscheck},
  };
  return suites;
}

const Suite &find_suite(const std::string &name) {
  for (const auto &s : registry())
    if (name == s.name)
      return s;
  std::string known;
  for (const auto &s : registry())
    known += std::string(known.empty() ? "" : ", ") + s.name;
  throw InvalidInput("unknown suite '" + name + "' (known: " + known + ")");
}

Check evaluate(const Suite &s, const Json &input, bool mutate) {
  Check result = s.check(input);
  if (!mutate)
    return result;
  if (result)
    return std::nullopt;
  return "mutation: property held and the inverted predicate rejects it";
}

} // namespace

Json SuiteReport::to_json() const {
  Json fs = Json::array();
  for (const auto &f : failures)
    fs.push_back({{"input", f.input}, {"reason", f.reason}});
  return {{"suite", name},     {"label", label},   {"seed", seed},
          {"trials", trials},  {"mutated", mutated}, {"passed", passed()},
          {"failures", std::move(fs)}, {"elapsed_seconds", elapsed_seconds}};
}

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto &s : registry())
      out.emplace_back(s.name);
    return out;
  }();
  return names;
}

std::string suite_label(const std::string &name) { return find_suite(name).label; }

SuiteReport run_suite(const std::string &name, const SuiteConfig &config) {
  const Suite &s = find_suite(name);
  const auto start = std::chrono::steady_clock::now();
  Rng rng(config.seed);
  SuiteReport report;
  report.name = s.name;
  report.label = s.label;
  report.seed = config.seed;
  report.mutated = config.mutate;
  auto cases = s.cases(rng, config);
  report.trials = static_cast<int>(cases.size());
  for (auto &input : cases) {
    Check why;
    try {
      why = evaluate(s, input, config.mutate);
    } catch (const std::exception &ex) {
      why = std::string("exception: ") + ex.what();
    }
    if (why)
      report.failures.push_back({std::move(input), *why});
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<std::string> replay_case(const std::string &name, const Json &input,
                                       bool mutate) {
  return evaluate(find_suite(name), input, mutate);
}

std::vector<FgGroup> small_finite_corpus() {
  auto g = [](std::initializer_list<int> fs) {
    std::vector<Integer> v(fs.begin(), fs.end());
    return FgGroup(0, v);
  };
  return {g({2}), g({3}), g({4}), g({2, 2}), g({6}), g({8}), g({2, 4}), g({2, 2, 2})};
}

} // namespace abext
