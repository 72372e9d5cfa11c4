#include <doctest.h>

#include "argdyn/oracle.hpp"
#include "helpers.hpp"

using namespace argdyn;
using namespace argdyn::test;

namespace {

const char* kExample1 =
    "arg(A).arg(B).arg(C).arg(D).arg(F)."
    "att(A,B).att(B,A).att(B,C).att(C,D).att(D,F).att(F,C).";

}  // namespace

TEST_CASE("five-argument reference framework") {
  Framework f = fw(kExample1);

  std::vector<ArgSet> adm{S({}), S({"A"}), S({"B"}), S({"B", "D"})};
  CHECK(admissible_sets(f) == adm);
  CHECK(preferred(f) == E(SemanticsKind::Preferred, {S({"A"}), S({"B", "D"})}));
  CHECK(grounded(f) == E(SemanticsKind::Grounded, {S({})}));
  CHECK(stable(f) == E(SemanticsKind::Stable, {S({"B", "D"})}));
}

TEST_CASE("characteristic function") {
  Framework f = fw(kExample1);
  CHECK(characteristic(f, S({})) == S({}));
  CHECK(characteristic(f, S({"B"})) == S({"B", "D"}));
  Framework no_attacks = fw("arg(a).arg(b).");
  CHECK(characteristic(no_attacks, S({})) == S({"a", "b"}));
  CHECK_THROWS_AS(characteristic(f, S({"nope"})), DomainError);
}

TEST_CASE("grounded on small fixtures") {
  CHECK(grounded(fw("arg(A).arg(B).arg(C).att(A,B).")) ==
        E(SemanticsKind::Grounded, {S({"A", "C"})}));
  CHECK(grounded(fw("arg(A).arg(B).arg(C).att(A,B).att(B,C).att(C,A).")) ==
        E(SemanticsKind::Grounded, {S({})}));
}

TEST_CASE("stable may have no extension") {
  Framework three = fw("arg(A).arg(B).arg(C).att(A,B).att(B,C).att(C,A).");
  ExtensionSet s = stable(three);
  CHECK(s.no_extension());
  CHECK_FALSE(s.single_empty());
  CHECK(stable(fw("arg(A).arg(B).")) ==
        E(SemanticsKind::Stable, {S({"A", "B"})}));
}

TEST_CASE("no extension vs single empty extension") {
  ExtensionSet none{SemanticsKind::Stable, {}};
  ExtensionSet empty = E(SemanticsKind::Stable, {S({})});
  CHECK(none.no_extension());
  CHECK_FALSE(none.single_empty());
  CHECK(empty.single_empty());
  CHECK_FALSE(empty.no_extension());
  CHECK_FALSE(none == empty);
}

TEST_CASE("union and intersection of extension sets") {
  ExtensionSet e = E(SemanticsKind::Preferred, {S({"a", "b"}), S({"a", "c"})});
  CHECK(e.union_of() == S({"a", "b", "c"}));
  CHECK(e.intersection_of() == S({"a"}));
  ExtensionSet none{SemanticsKind::Stable, {}};
  CHECK(none.intersection_of() == S({}));
  CHECK(none.union_of() == S({}));
}

TEST_CASE("canonical extension order") {
  ExtensionSet e = make_extension_set(
      SemanticsKind::Preferred, {S({"b", "d"}), S({"a"}), S({"b", "d"})});
  REQUIRE(e.extensions.size() == 2);
  CHECK(e.extensions[0] == S({"a"}));
  CHECK(e.extensions[1] == S({"b", "d"}));
}

TEST_CASE("argument status") {
  Framework f = fw(kExample1);
  CHECK(status(f, "D", SemanticsKind::Preferred) ==
        ArgumentStatus::CredulouslyOnlyAccepted);
  CHECK(status(f, "C", SemanticsKind::Preferred) == ArgumentStatus::Rejected);
  CHECK(status(f, "B", SemanticsKind::Stable) ==
        ArgumentStatus::SkepticallyAccepted);
  Framework ab = fw("arg(A).arg(B).att(A,B).");
  CHECK(status(ab, "A", SemanticsKind::Grounded) ==
        ArgumentStatus::SkepticallyAccepted);
  // No stable extension: everything is rejected.
  Framework three = fw("arg(A).arg(B).arg(C).att(A,B).att(B,C).att(C,A).");
  CHECK(status(three, "A", SemanticsKind::Stable) == ArgumentStatus::Rejected);
  CHECK_THROWS_AS(status(f, "nope", SemanticsKind::Grounded), DomainError);
}

TEST_CASE("is_admissible matches the definition") {
  Framework f = fw(kExample1);
  CHECK(is_admissible(f, S({})));
  CHECK(is_admissible(f, S({"B", "D"})));
  CHECK_FALSE(is_admissible(f, S({"D"})));     // undefended against C
  CHECK_FALSE(is_admissible(f, S({"A", "B"}))); // conflicting
}

TEST_CASE("engine rejects frameworks beyond the bitmask width") {
  ArgSet args;
  for (int i = 0; i < 65; ++i)
    args.insert(ArgumentId("a" + std::to_string(i)));
  Framework f(std::move(args), {});
  CHECK_THROWS_AS(preferred(f), DomainError);
  // Grounded iteration is not mask-bound.
  CHECK(grounded(f).extensions.front().size() == 65);
}

TEST_CASE("semantics invariants on random frameworks") {
  oracle::SplitMix64 seeds(0xABCDEF);
  const double probs[] = {0.1, 0.3, 0.6};
  for (int i = 0; i < 200; ++i) {
    oracle::GeneratorConfig cfg;
    cfg.argument_count = 1 + i % 9;
    cfg.attack_probability = probs[i % 3];
    cfg.allow_self_attacks = (i % 4 == 3);
    cfg.seed = seeds.next();
    Framework f = oracle::random_framework(cfg);

    ExtensionSet gr = grounded(f), pr = preferred(f), st = stable(f);
    REQUIRE(gr.extensions.size() == 1);
    REQUIRE(!pr.extensions.empty());

    auto subset = [](const ArgSet& a, const ArgSet& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };

    // Every admissible set extends to a preferred extension.
    for (const ArgSet& s : admissible_sets(f)) {
      bool covered = false;
      for (const ArgSet& p : pr.extensions)
        covered = covered || subset(s, p);
      CHECK(covered);
    }
    // Stable extensions are preferred; grounded is in every preferred
    // and stable extension, and contains the unattacked arguments.
    for (const ArgSet& s : st.extensions) {
      CHECK(std::count(pr.extensions.begin(), pr.extensions.end(), s) == 1);
      CHECK(subset(gr.extensions.front(), s));
    }
    for (const ArgSet& p : pr.extensions)
      CHECK(subset(gr.extensions.front(), p));
    CHECK(subset(f.unattacked(), gr.extensions.front()));

    if (!f.has_cycle()) {
      CHECK(pr == E(SemanticsKind::Preferred, {gr.extensions.front()}));
      CHECK(st == E(SemanticsKind::Stable, {gr.extensions.front()}));
    }
    if (pr.single_empty())
      CHECK(f.has_odd_cycle());
    if (st.no_extension())
      CHECK(f.has_odd_cycle());
    if (!f.has_odd_cycle())
      CHECK(pr.extensions == st.extensions);
    if (!f.has_even_cycle())
      CHECK(pr.extensions.size() == 1);
  }
}
