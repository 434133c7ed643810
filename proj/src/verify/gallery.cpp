#include "verify/gallery.hpp"

#include <algorithm>

namespace vmeasure::verify {

namespace {

Json seq(const std::string& coeff, const std::string& ratio, Json exceptional = Json::object(),
         unsigned start = 0) {
  for (const auto& [key, value] : exceptional.items())
    start = std::max<unsigned>(start, static_cast<unsigned>(std::stoul(key)) + 1);
  return Json{{"exceptional", std::move(exceptional)},
              {"tail", {{"start", start}, {"coeff", coeff}, {"ratio", ratio}}}};
}

Json counting() { return Json{{"weights", seq("1", "1")}}; }

Json finite_target(unsigned dim, Json p) { return Json{{"kind", "finite"}, {"dim", dim}, {"p", std::move(p)}}; }

Json rank_one(Json f, Json x) {
  return Json{{"kind", "rank"}, {"terms", Json::array({Json{{"seq", std::move(f)}, {"vec", std::move(x)}}})}};
}

Json finite_set(std::vector<unsigned> members) { return Json{{"finite", members}}; }
Json cofinite_set(std::vector<unsigned> excluded) { return Json{{"cofinite", excluded}}; }

Json all_checks() {
  Json out = Json::array();
  for (auto name : known_checks()) out.push_back(std::string(name));
  return out;
}

Scenario make(const std::string& name, Json space, Json target, Json f, Json multipliers, Json sets,
              Json expect) {
  Json j{{"name", name},       {"space", std::move(space)}, {"target", std::move(target)},
         {"F", std::move(f)},  {"multipliers", std::move(multipliers)},
         {"sets", std::move(sets)}, {"checks", all_checks()}, {"expect", std::move(expect)}};
  return read_scenario(j, name);
}

Json standard_sets() {
  return Json::array({finite_set({0, 1, 2}), finite_set({1, 3, 4, 6, 7}), finite_set({0, 2, 3, 5, 6, 8, 9, 11}),
                      cofinite_set({0, 1, 5})});
}

// F = 1 (1,1) into l^inf_2 under counting measure: locally Bochner, not
// Bochner, with infinite variation and semivariation.
Scenario example5() {
  return make("example5", counting(), finite_target(2, "inf"), rank_one(seq("1", "1"), {"1", "1"}),
              Json::array({seq("1", "1/2"), seq("1", "1"), seq("0", "0", {{"0", "3"}, {"4", "-1"}})}),
              standard_sets(),
              {{"locally_bochner", true},
               {"locally_pettis", true},
               {"bochner", false},
               {"pettis", false},
               {"dunford", false},
               {"bounded", false},
               {"strongly_additive", false},
               {"dunford_norm", "inf"},
               {"bochner_norm", "inf"},
               {"semivariation_N", "inf"},
               {"multipliers",
                Json::array({Json{{"in_L1w", true}, {"in_L1", true}, {"in_L1_of_variation", true},
                                  {"nu_norm", "2"}, {"variation_norm", "2"}, {"integral", {"2", "2"}}},
                             Json{{"in_L1w", false}, {"in_L1", false}, {"in_L1_of_variation", false},
                                  {"nu_norm", "inf"}, {"variation_norm", "inf"}},
                             Json{{"in_L1", true}, {"nu_norm", "4"}, {"integral", {"2", "2"}}}})}});
}

// F = 2^-t (3,4) in Euclidean R^2: |nu_F|(N) = ||nu_F||(N) = 2 * 5.
Scenario example10() {
  return make("example10-rank-one", counting(), finite_target(2, 2), rank_one(seq("1", "1/2"), {"3", "4"}),
              Json::array({seq("1", "1"), seq("1", "3/2"), seq("1", "2")}), standard_sets(),
              {{"bochner", true},
               {"pettis", true},
               {"dunford", true},
               {"bounded", true},
               {"strongly_additive", true},
               {"dunford_norm", "10"},
               {"bochner_norm", "10"},
               {"semivariation_N", "10"},
               {"multipliers",
                Json::array({Json{{"in_L1", true}, {"nu_norm", "10"}, {"variation_norm", "10"},
                                  {"integral", {"6", "8"}}},
                             Json{{"in_L1", true}, {"nu_norm", "20"}, {"integral", {"12", "16"}}},
                             Json{{"in_L1w", false}, {"in_L1", false}, {"nu_norm", "inf"}}})}});
}

Json c0_target() { return Json{{"kind", "c0"}}; }
Json diagonal(Json s) { return Json{{"kind", "diagonal"}, {"seq", std::move(s)}}; }

// F(t) = e_t in c0: Dunford, bounded, not Pettis, not strongly additive.
Scenario c0_ones() {
  return make("c0-diagonal-ones", counting(), c0_target(), diagonal(seq("1", "1")),
              Json::array({seq("1", "1/2"), seq("1", "1"), seq("0", "0", {{"2", "5"}})}), standard_sets(),
              {{"locally_bochner", true},
               {"locally_pettis", true},
               {"dunford", true},
               {"pettis", false},
               {"bochner", false},
               {"bounded", true},
               {"strongly_additive", false},
               {"dunford_norm", "1"},
               {"bochner_norm", "inf"},
               {"semivariation_N", "1"},
               {"multipliers",
                Json::array({Json{{"in_L1w", true}, {"in_L1", true}, {"in_L1_of_variation", true},
                                  {"nu_norm", "1"}, {"variation_norm", "2"}},
                             Json{{"in_L1w", true}, {"in_L1", false}, {"in_L1_of_variation", false},
                                  {"nu_norm", "1"}, {"variation_norm", "inf"}},
                             Json{{"in_L1", true}, {"nu_norm", "5"}, {"variation_norm", "5"}}})}});
}

// F(t) = 2^-t e_t in c0: Bochner, hence Pettis, with a strongly additive nu_F.
Scenario c0_geometric() {
  return make("c0-diagonal-geometric", counting(), c0_target(), diagonal(seq("1", "1/2")),
              Json::array({seq("1", "1"), seq("1", "2"), seq("1", "4")}), standard_sets(),
              {{"bochner", true},
               {"pettis", true},
               {"dunford", true},
               {"bounded", true},
               {"strongly_additive", true},
               {"dunford_norm", "1"},
               {"bochner_norm", "2"},
               {"semivariation_N", "1"},
               {"multipliers",
                Json::array({Json{{"in_L1", true}, {"nu_norm", "1"}, {"variation_norm", "2"}},
                             Json{{"in_L1w", true}, {"in_L1", false}, {"nu_norm", "1"},
                                  {"variation_norm", "inf"}},
                             Json{{"in_L1w", false}, {"nu_norm", "inf"}}})}});
}

Json half_weights() { return Json{{"weights", seq("1", "1/2")}}; }

std::vector<Scenario> remark8() {
  return {
      make("remark8-bounded-variation", half_weights(), finite_target(3, 1),
           Json{{"kind", "rank"},
                {"terms", Json::array({Json{{"seq", seq("1", "1")}, {"vec", {"1", "0", "-1"}}},
                                       Json{{"seq", seq("0", "0", {{"1", "2"}})}, {"vec", {"0", "1", "1"}}}})}},
           Json::array({seq("1", "1"), seq("1", "2")}), standard_sets(),
           {{"locally_bochner", true}, {"bochner", true}, {"bochner_norm", "5"}}),
      make("remark8-unbounded-variation", counting(), finite_target(3, 1),
           rank_one(seq("1", "1"), {"1", "0", "-1"}), Json::array({seq("1", "1/2")}), standard_sets(),
           {{"locally_bochner", true}, {"bochner", false}, {"bochner_norm", "inf"}}),
      make("remark8-not-locally-bochner", half_weights(), finite_target(2, 2),
           rank_one(seq("1", "4"), {"1", "1"}), Json::array(), standard_sets(),
           {{"error", "NotLocallyPettisError"}, {"locally_bochner", false}, {"bochner", false}}),
  };
}

std::vector<Scenario> corollary13() {
  return {
      make("corollary13-pettis", half_weights(), finite_target(2, "inf"),
           rank_one(seq("3", "1", {{"0", "-1"}}, 1), {"1", "2"}), Json::array({seq("1", "1")}), standard_sets(),
           {{"pettis", true}, {"strongly_additive", true}, {"locally_pettis", true}}),
      make("corollary13-not-strongly-additive", counting(), finite_target(2, 1),
           rank_one(seq("1", "1"), {"1", "-1"}), Json::array({seq("1", "1/3")}), standard_sets(),
           {{"pettis", false}, {"strongly_additive", false}, {"locally_pettis", true}}),
      make("corollary13-c0-not-strongly-additive", counting(), c0_target(), diagonal(seq("1", "1")),
           Json::array(), standard_sets(),
           {{"pettis", false}, {"dunford", true}, {"strongly_additive", false}}),
      make("corollary13-not-locally-pettis", half_weights(), finite_target(2, "inf"),
           rank_one(seq("1", "3"), {"1", "0"}), Json::array(), standard_sets(),
           {{"error", "NotLocallyPettisError"}, {"locally_pettis", false}, {"pettis", false}}),
  };
}

// F = f x with f(0) = 2, f(1) = 0, f(t) = 1 beyond, x = (1,2,-2), mu_t = 3^-t.
// int |f| dmu = 2 + 1/6, ||x|| = 3.
Scenario example16() {
  return make("example16-equality", Json{{"weights", seq("1", "1/3")}}, finite_target(3, 2),
              rank_one(seq("1", "1", {{"0", "2"}, {"1", "0"}}, 2), {"1", "2", "-2"}),
              Json::array({seq("1", "1"), seq("1", "2"), seq("1", "3"), seq("0", "0", {{"1", "9"}, {"3", "-3"}})}),
              standard_sets(),
              {{"bochner", true},
               {"bochner_norm", "13/2"},
               {"semivariation_N", "13/2"},
               {"multipliers",
                Json::array({Json{{"in_L1w", true}, {"in_L1", true}, {"in_L1_of_variation", true},
                                  {"nu_norm", "13/2"}, {"variation_norm", "13/2"},
                                  {"integral", {"13/6", "13/3", "-13/3"}}},
                             Json{{"in_L1", true}, {"nu_norm", "10"}, {"variation_norm", "10"}},
                             Json{{"in_L1w", false}, {"in_L1", false}, {"in_L1_of_variation", false}},
                             Json{{"in_L1", true}, {"nu_norm", "1/3"}}})}});
}

std::vector<GalleryEntry> build() {
  return {
      {"example5", "counting measure, F = 1 (1,1): locally Bochner, not Bochner, infinite variation",
       {example5()}},
      {"example10-rank-one", "rank-one density: semivariation equals variation", {example10()}},
      {"c0-diagonal-ones", "F(t) = e_t in c0: Dunford and bounded, not Pettis, not strongly additive",
       {c0_ones()}},
      {"c0-diagonal-geometric", "F(t) = 2^-t e_t in c0: Pettis, strongly additive", {c0_geometric()}},
      {"remark8-equivalence", "Bochner iff locally Bochner with finite variation", remark8()},
      {"corollary13-both-directions", "Pettis iff locally Pettis with strongly additive nu_F", corollary13()},
      {"example16-equality", "rank-one density: L1(|nu_F|) = L1(nu_F) = L1w(nu_F)", {example16()}},
  };
}

}  // namespace

const std::vector<GalleryEntry>& gallery() {
  static const std::vector<GalleryEntry> entries = build();
  return entries;
}

const GalleryEntry* find_gallery_entry(std::string_view name) {
  for (const auto& e : gallery())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace vmeasure::verify
