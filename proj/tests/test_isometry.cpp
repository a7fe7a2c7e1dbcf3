#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "calab/error.hpp"
#include "calab/isometry/classify.hpp"
#include "calab/isometry/corroborate.hpp"
#include "calab/isometry/permutation.hpp"

using namespace calab;
using namespace calab::isometry;

namespace {

PermutationSpec blocks_spec() { return PermutationSpec({}, IncreasingBlocks{0}, {}); }
PermutationSpec cycles_spec() { return PermutationSpec({{-3, -2}, {5, 7, 9}}, std::nullopt, {}); }

struct Row {
  const char* name;
  PermutationSpec spec;
  Verdict linfty;
  Verdict ell1;
};

std::vector<Row> table() {
  return {{"identity", PermutationSpec::identity(), Verdict::Zero, Verdict::Zero},
          {"shift", PermutationSpec::shift(1), Verdict::Infinite, Verdict::Infinite},
          {"shift-back-3", PermutationSpec::shift(-3), Verdict::Infinite, Verdict::Infinite},
          {"blocks", blocks_spec(), Verdict::Infinite, Verdict::Zero},
          {"cycles", cycles_spec(), Verdict::Zero, Verdict::Zero},
          {"cycles+shift", PermutationSpec({{0, 10}}, std::nullopt, {DefaultKind::ShiftBy, 2}), Verdict::Infinite,
           Verdict::Infinite}};
}

}  // namespace

TEST_CASE("permutation presentation") {
  const auto s = PermutationSpec::shift(1);
  CHECK(s.apply(4) == 5);
  CHECK(s.inverse(5) == 4);

  const auto b = blocks_spec();
  CHECK(b.block_of(0) == 1);
  CHECK(b.block_range(3) == std::pair<long long, long long>{3, 6});
  CHECK(b.apply(3) == 4);
  CHECK(b.apply(5) == 3);
  CHECK(b.apply(-7) == -7);

  // Shifting past a cycle skips its points.
  const auto sc = PermutationSpec({{1, 2}}, std::nullopt, {DefaultKind::ShiftBy, 1});
  CHECK(sc.apply(0) == 3);
  CHECK(sc.apply(1) == 2);
  CHECK(sc.apply(2) == 1);
  for (long long x = -20; x <= 20; ++x) CHECK(sc.inverse(sc.apply(x)) == x);

  CHECK_THROWS_AS(PermutationSpec({{1, 2}, {2, 3}}, std::nullopt, {}), InvalidArgument);
  CHECK_THROWS_AS(PermutationSpec({{4}}, IncreasingBlocks{0}, {}), InvalidArgument);
  CHECK_THROWS_AS(PermutationSpec({}, IncreasingBlocks{0}, {DefaultKind::ShiftBy, 1}), InvalidArgument);
  CHECK_THROWS_AS(PermutationSpec({}, std::nullopt, {DefaultKind::ShiftBy, 0}), InvalidArgument);
  CHECK_THROWS_AS(PermutationSpec({{}}, std::nullopt, {}), InvalidArgument);
}

TEST_CASE("orbit census") {
  const auto id = orbit_census(PermutationSpec::identity(), 0, 10);
  CHECK(id.orbits.size() == 10);
  for (const auto& o : id.orbits) {
    CHECK(o.size == 1);
    CHECK(o.kind == OrbitKind::Fixed);
  }
  CHECK(id.bounded);
  CHECK(id.global_bound == 1);

  const auto sh = orbit_census(PermutationSpec::shift(1), 0, 10);
  CHECK(sh.has_infinite);
  CHECK(sh.infinite_orbits == 1);
  CHECK_FALSE(sh.bounded);
  REQUIRE(sh.orbits.size() == 1);
  CHECK(sh.orbits[0].kind == OrbitKind::Infinite);
  CHECK(sh.orbits[0].in_window == 10);
  CHECK(orbit_census(PermutationSpec::shift(3), 0, 10).infinite_orbits == 3);

  const auto bl = orbit_census(blocks_spec(), 0, 21);
  CHECK(bl.unbounded_finite);
  CHECK_FALSE(bl.bounded);
  CHECK_FALSE(bl.has_infinite);
  REQUIRE(bl.orbits.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(bl.orbits[i].size == i + 1);
  CHECK(bl.max_finite == 6);
  // A window cutting block 7 still reports its full length.
  CHECK(orbit_census(blocks_spec(), 0, 22).max_finite == 7);

  const auto cy = orbit_census(cycles_spec(), -8, 16);
  CHECK(cy.bounded);
  CHECK(cy.global_bound == 3);
  CHECK(cy.max_finite == 3);

  CHECK_THROWS_AS(orbit_census(PermutationSpec::identity(), 5, 5), InvalidArgument);
  CHECK_THROWS_AS(orbit_census(PermutationSpec::identity(), 0, kMaxWindow + 1), InvalidArgument);
}

TEST_CASE("classifier table") {
  for (const auto& row : table()) {
    CAPTURE(row.name);
    const auto li = classify_linfty(row.spec);
    const auto l1 = classify_ell1(row.spec);
    CHECK(li.verdict == row.linfty);
    CHECK(l1.verdict == row.ell1);
    CHECK(verify_evidence(row.spec, li));
    CHECK(verify_evidence(row.spec, l1));
    CHECK_FALSE(li.reason.empty());
    const auto j = to_json(li);
    CHECK(j.at("verdict") == to_string(li.verdict));
  }
  CHECK(classify_linfty(blocks_spec()).evidence.kind == Evidence::Kind::UnboundedFiniteOrbits);
  CHECK(classify_ell1(blocks_spec()).evidence.kind == Evidence::Kind::NoInfiniteOrbit);
  CHECK(classify_linfty(PermutationSpec::shift(1)).evidence.kind == Evidence::Kind::InfiniteOrbit);
  CHECK(classify_linfty(cycles_spec()).evidence.max_orbit == 3);
}

TEST_CASE("tampered evidence is rejected") {
  auto c = classify_linfty(cycles_spec());
  REQUIRE_FALSE(c.evidence.finite_orbits.empty());
  c.evidence.finite_orbits[0].push_back(100);
  CHECK_FALSE(verify_evidence(cycles_spec(), c));

  auto s = classify_ell1(PermutationSpec::shift(1));
  REQUIRE(s.evidence.segment.size() > 2);
  s.evidence.segment[1] += 1;
  CHECK_FALSE(verify_evidence(PermutationSpec::shift(1), s));

  // Evidence for one spec does not certify another.
  CHECK_FALSE(verify_evidence(PermutationSpec::identity(), classify_linfty(blocks_spec())));

  auto b = classify_linfty(blocks_spec());
  std::swap(b.evidence.finite_orbits.front(), b.evidence.finite_orbits.back());
  CHECK_FALSE(verify_evidence(blocks_spec(), b));

  auto flipped = classify_ell1(PermutationSpec::identity());
  flipped.verdict = Verdict::Infinite;
  CHECK_FALSE(verify_evidence(PermutationSpec::identity(), flipped));
}

TEST_CASE("verdicts ignore phases") {
  const char* base = R"({"cycles": [[1, 2]], "blocks": null, "default": {"kind": "shift", "t": 1}})";
  const auto spec = spec_from_json(nlohmann::json::parse(base));
  const std::vector<nlohmann::json> phase_docs{
      nlohmann::json::parse(R"({"kind": "constant", "value": 1})"),
      nlohmann::json::parse(R"({"kind": "constant", "value": [0, 1]})"),
      nlohmann::json::parse(R"({"kind": "periodic", "values": [1, -1, [0, -1]]})"),
      nlohmann::json::parse(R"({"kind": "per-cycle", "values": [-1], "default": [0, 1]})")};
  for (const auto& p : phase_docs) {
    CHECK_NOTHROW(phases_from_json(p));
    CHECK(classify_linfty(spec).verdict == Verdict::Infinite);
    CHECK(classify_ell1(spec).verdict == Verdict::Infinite);
  }
  CHECK(phases_from_json(phase_docs[2]).at(2, spec) == cplx(0.0, -1.0));
  CHECK(phases_from_json(phase_docs[3]).at(1, spec) == cplx(-1.0, 0.0));
  CHECK(phases_from_json(phase_docs[3]).at(5, spec) == cplx(0.0, 1.0));
  CHECK_FALSE(phases_from_json(phase_docs[1]).is_real());
  CHECK(phases_from_json(phase_docs[0]).is_real());
}

TEST_CASE("verdicts survive relabeling of cycle points") {
  const std::vector<std::vector<std::vector<long long>>> layouts{
      {{-3, -2}, {5, 7, 9}}, {{-2, -3}, {9, 5, 7}}, {{40, 41}, {-100, 3, 17}}, {{5, 7, 9}, {-3, -2}}};
  for (const auto& cyc : layouts) {
    for (auto rule : {DefaultRule{}, DefaultRule{DefaultKind::ShiftBy, 1}}) {
      const PermutationSpec s(cyc, std::nullopt, rule);
      const Verdict want = rule.kind == DefaultKind::ShiftBy ? Verdict::Infinite : Verdict::Zero;
      CHECK(classify_linfty(s).verdict == want);
      CHECK(classify_ell1(s).verdict == want);
      CHECK(verify_evidence(s, classify_linfty(s)));
    }
  }
  // Moving the block family's origin leaves the split verdict intact.
  for (long long o : {-50, 0, 7}) {
    const PermutationSpec s({}, IncreasingBlocks{o}, {});
    CHECK(classify_linfty(s).verdict == Verdict::Infinite);
    CHECK(classify_ell1(s).verdict == Verdict::Zero);
  }
}

TEST_CASE("presentation json") {
  const auto j = nlohmann::json::parse(R"({"cycles": [[1, 2, 3]], "blocks": {"origin": 10}, "default": {"kind": "identity"}})");
  const auto s = spec_from_json(j);
  CHECK(s.blocks()->origin == 10);
  const auto round = spec_from_json(spec_to_json(s));
  for (long long x = -5; x < 40; ++x) CHECK(round.apply(x) == s.apply(x));

  CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"([1])")), InvalidArgument);
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"cycles": [], "blocks": "decreasing"})")),
                  InvalidArgument);
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"cycles": [], "default": {"kind": "reflect"}})")),
                  InvalidArgument);
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"cycles": [], "colour": 1})")), InvalidArgument);
  CHECK_THROWS_AS(phases_from_json(nlohmann::json::parse(R"({"kind": "constant", "value": 2})")), InvalidArgument);
  CHECK_THROWS_AS(phases_from_json(nlohmann::json::parse(R"({"kind": "periodic", "values": []})")), InvalidArgument);
}

TEST_CASE("window truncation") {
  const auto t = truncate(PermutationSpec::shift(1), 0, 5);
  CHECK(t.image == std::vector<long long>{1, 2, 3, 4, 0});
  CHECK(t.agrees == std::vector<char>{1, 1, 1, 1, 0});

  // The truncation is always a permutation of the window.
  for (const auto& row : table()) {
    const auto tr = truncate(row.spec, -7, 30);
    std::set<long long> seen(tr.image.begin(), tr.image.end());
    CHECK(seen.size() == tr.image.size());
    CHECK(*seen.begin() == -7);
    CHECK(*seen.rbegin() == 29);
    for (std::size_t i = 0; i < tr.image.size(); ++i)
      if (tr.agrees[i]) CHECK(tr.image[i] == row.spec.apply(-7 + static_cast<long long>(i)));
  }
  CHECK_THROWS_AS(truncate(PermutationSpec::identity(), 3, 3), InvalidArgument);
  CHECK_THROWS_AS(truncate(PermutationSpec::identity(), 0, kMaxWindow + 1), GuardExceeded);
}

TEST_CASE("empirical corroboration") {
  const auto id = empirical_corroboration(PermutationSpec::identity(), PhaseSpec::constant(), 0, 64, 0.05, 1.0);
  CHECK(id.classification.verdict == Verdict::Zero);
  REQUIRE(id.witness);
  CHECK_FALSE(id.witness->found);
  CHECK(id.corroborated);

  CorroborationOptions l1;
  l1.m = 4;
  l1.n_max = 12;
  const auto sh = empirical_corroboration(PermutationSpec::shift(1), PhaseSpec::constant(), 0, 64, 0.05, 1.0, l1);
  CHECK(sh.classification.verdict == Verdict::Infinite);
  REQUIRE(sh.growth);
  CHECK(sh.growth->rows.back().normalized > 0.0);
  CHECK(sh.corroborated);

  CorroborationOptions li;
  li.space = SequenceSpace::Linfty;
  li.field = Field::Real;
  li.m = 2;
  li.n_max = 6;
  const auto bl = empirical_corroboration(blocks_spec(), PhaseSpec::constant(), 0, 1000, 0.05, 1.0, li);
  CHECK(bl.classification.verdict == Verdict::Infinite);
  CHECK(bl.corroborated);
  CHECK_THROWS_AS(empirical_corroboration(blocks_spec(), PhaseSpec::constant(), 0, 64, 0.05, 1.0, li),
                  InsufficientWindow);

  CorroborationOptions shortwin = l1;
  CHECK_THROWS_AS(
      empirical_corroboration(PermutationSpec::shift(1), PhaseSpec::constant(), 0, 8, 0.05, 1.0, shortwin),
      InsufficientWindow);

  CorroborationOptions real = l1;
  real.field = Field::Real;
  CHECK_THROWS_AS(
      empirical_corroboration(PermutationSpec::shift(1), PhaseSpec::constant(), 0, 64, 0.05, 1.0, real),
      InvalidArgument);
}
