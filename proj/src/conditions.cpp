#include "argdyn/conditions.hpp"

#include <algorithm>
#include <sstream>

namespace argdyn {

namespace {

const AddArgument& expect_add_argument(const Change& c) {
  const auto* add = std::get_if<AddArgument>(&c);
  if (!add)
    throw DomainError("condition evaluation requires an add-argument change");
  return *add;
}

// Predicate vocabulary of the add-argument tables. All of these read
// only the interaction set, since z has no edges in the before-graph.
struct AddedArgumentView {
  const Framework& f;
  const AddArgument& ch;

  bool z_attacked() const {
    return std::any_of(ch.interactions.begin(), ch.interactions.end(),
                       [&](const Attack& a) { return a.second == ch.z; });
  }
  bool z_attacks_graph() const {
    return std::any_of(ch.interactions.begin(), ch.interactions.end(),
                       [&](const Attack& a) { return a.first == ch.z; });
  }
  bool z_attacks(const ArgSet& s) const {
    return std::any_of(ch.interactions.begin(), ch.interactions.end(),
                       [&](const Attack& a) {
                         return a.first == ch.z && s.count(a.second);
                       });
  }
  /// s attacks (in the before-graph) every attacker of z.
  bool defends_z(const ArgSet& s) const {
    for (const Attack& a : ch.interactions)
      if (a.second == ch.z && !f.set_attacks(s, a.first))
        return false;
    return true;
  }
  bool z_attacks_all_unattacked() const {
    for (const ArgumentId& a : f.unattacked())
      if (!ch.interactions.count({ch.z, a}))
        return false;
    return true;
  }
};

std::string fmt(const ArgSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const ArgumentId& a : s) {
    if (!first)
      out << ',';
    out << a.name();
    first = false;
  }
  out << '}';
  return out.str();
}

std::string fmt(const ExtensionSet& e) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const ArgSet& x : e.extensions) {
    if (!first)
      out << ',';
    out << fmt(x);
    first = false;
  }
  out << '}';
  return out.str();
}

// {z} together with the union of all iterates of the characteristic
// function of `after` applied to {z}.
ArgSet iterate_from_z(const Framework& after, const ArgumentId& z) {
  ArgSet acc{z};
  ArgSet cur{z};
  for (std::size_t i = 0; i <= after.size(); ++i) {
    cur = characteristic(after, cur);
    ArgSet merged = acc;
    merged.insert(cur.begin(), cur.end());
    if (merged == acc)
      break;
    acc = std::move(merged);
  }
  return acc;
}

struct ReportBuilder {
  ConditionReport report;

  void fire(const std::string& property, const std::string& prop_id) {
    report.fired_cs.emplace(property, prop_id);
    report.guaranteed.insert(property);
  }
  void fail_cn(const std::string& property, const std::string& prop_id) {
    report.failed_cn.emplace(property, prop_id);
    report.excluded.insert(property);
  }
};

struct Verifier {
  const Framework& f;
  const Change& c;
  std::vector<Violation>& out;

  void require(bool ok, const std::string& id, const std::string& expected,
               const std::string& observed) {
    if (!ok)
      out.push_back(Violation{id, f, c, expected, observed});
  }
};

void verify_grounded_addition(Verifier& v, const Framework& f,
                              const AddArgument& add, const Framework& after,
                              const ExtensionSet& before_e,
                              const ExtensionSet& after_e,
                              const ClassificationReport& report) {
  AddedArgumentView view{f, add};
  const ArgSet& e = before_e.extensions.front();
  const ArgSet& ep = after_e.extensions.front();
  bool z_att = view.z_attacked();
  bool z_attacks_e = view.z_attacks(e);
  bool e_defends_z = view.defends_z(e);

  // Partial monotony from the absence of indirect attack in the
  // after-graph (z is isolated before the change).
  for (const ArgumentId& x : e)
    if (!after.indirectly_attacks(add.z, x))
      v.require(ep.count(x) != 0, "P7",
                "'" + x.name() + "' stays accepted", fmt(ep));

  if (!z_att)
    v.require(ep.count(add.z) != 0, "P8", "z in grounded extension", fmt(ep));

  if (e.empty()) {
    v.require(ep.empty() == z_att, "P9-iff",
              "after-extension empty iff z attacked",
              "z_attacked=" + std::to_string(z_att) + " after=" + fmt(ep));
    if (!z_att) {
      ArgSet closed = iterate_from_z(after, add.z);
      v.require(ep == closed, "P9-form", fmt(closed), fmt(ep));
    }
  }

  if (!e.empty() && !z_attacks_e) {
    v.require(std::includes(ep.begin(), ep.end(), e.begin(), e.end()), "P10",
              fmt(e) + " subset of after-extension", fmt(ep));
    if (!e_defends_z) {
      v.require(ep == e, "P11-cons", fmt(e), fmt(ep));
    } else {
      ArgSet closed = iterate_from_z(after, add.z);
      closed.insert(e.begin(), e.end());
      v.require(ep == closed, "P11-exp", fmt(closed), fmt(ep));
      v.require(ep.count(add.z) != 0, "C2", "z in grounded extension",
                fmt(ep));
      if (!view.z_attacks_graph()) {
        ArgSet reduced = e;
        reduced.insert(add.z);
        v.require(ep == reduced, "P11-red", fmt(reduced), fmt(ep));
      }
    }
  }

  v.require(report.structural != StructuralProperty::Questioning &&
                report.structural != StructuralProperty::Restrictive,
            "P12", "grounded addition never questioning/restrictive",
            to_string(report.structural));

  if (!e.empty()) {
    bool destr_cond = view.z_attacks_all_unattacked() && z_att;
    bool destructive = report.structural == StructuralProperty::Destructive;
    v.require(destr_cond == destructive, "P13-iff",
              "destructive iff z attacks all unattacked and is attacked",
              "cond=" + std::to_string(destr_cond) +
                  " label=" + to_string(report.structural));
  }

  bool decisive = report.structural == StructuralProperty::Decisive;
  if (e.empty() && !z_att)
    v.require(decisive, "C1", "decisive", to_string(report.structural));
  if (decisive)
    v.require(!z_att && view.z_attacks_graph(), "C1",
              "decisive addition: z unattacked and z attacks the graph",
              "z_attacked=" + std::to_string(z_att));

  auto closed = grounded_closed_forms(f, Change{add});
  if (closed)
    v.require(*closed == ep, "CF", fmt(*closed), fmt(ep));
}

void verify_preferred_addition(Verifier& v, const Framework& f,
                               const AddArgument& add, const Framework& after,
                               const ExtensionSet& before_e,
                               const ExtensionSet& after_e,
                               const ClassificationReport& report) {
  AddedArgumentView view{f, add};
  bool z_att = view.z_attacked();
  bool z_attacks_g = view.z_attacks_graph();
  bool single_empty = before_e.single_empty();

  if (!z_att)
    for (const ArgSet& ej : after_e.extensions)
      v.require(ej.count(add.z) != 0, "P14", "z in every preferred extension",
                fmt(after_e));

  for (const ArgSet& ei : before_e.extensions) {
    if (!view.z_attacks(ei)) {
      v.require(is_admissible(after, ei), "P15",
                fmt(ei) + " stays admissible", "not admissible");
      if (view.defends_z(ei)) {
        ArgSet with_z = ei;
        with_z.insert(add.z);
        v.require(is_admissible(after, with_z), "P15",
                  fmt(with_z) + " admissible after change", "not admissible");
      }
    }
  }

  if (single_empty && !z_att && !f.has_even_cycle())
    v.require(after_e.extensions.size() == 1 &&
                  after_e.extensions.front().count(add.z) != 0 &&
                  report.structural == StructuralProperty::Decisive,
              "P16", "unique preferred extension containing z",
              fmt(after_e));

  if (single_empty && !z_attacks_g)
    v.require(after_e.single_empty(), "P17", "{{}}", fmt(after_e));

  if (!single_empty && !z_attacks_g) {
    std::vector<ArgSet> expected;
    for (const ArgSet& ei : before_e.extensions) {
      if (view.defends_z(ei)) {
        ArgSet with_z = ei;
        with_z.insert(add.z);
        expected.push_back(std::move(with_z));
      } else {
        expected.push_back(ei);
      }
    }
    ExtensionSet want = make_extension_set(SemanticsKind::Preferred,
                                           std::move(expected));
    v.require(after_e == want, "P18", fmt(want), fmt(after_e));
  }

  bool z_attacks_some =
      std::any_of(before_e.extensions.begin(), before_e.extensions.end(),
                  [&](const ArgSet& ei) { return view.z_attacks(ei); });
  if (!z_attacks_some)
    v.require(report.monotony, "P19", "monotony holds", "monotony=false");

  bool no_controversial =
      std::none_of(f.arguments().begin(), f.arguments().end(),
                   [&](const ArgumentId& x) { return f.is_controversial(x); });
  if (no_controversial && !view.z_attacks(before_e.intersection_of()))
    v.require(report.skeptical_monotony, "P20", "skeptical monotony holds",
              "false");

  if (!single_empty && !after.has_even_cycle() && z_att &&
      view.z_attacks_all_unattacked())
    v.require(report.structural == StructuralProperty::Destructive, "P21",
              "destructive", to_string(report.structural));

  bool all_defend =
      std::all_of(before_e.extensions.begin(), before_e.extensions.end(),
                  [&](const ArgSet& ei) { return view.defends_z(ei); });
  if (!z_attacks_some && all_defend)
    for (const ArgSet& ej : after_e.extensions)
      v.require(ej.count(add.z) != 0, "C3", "z in every preferred extension",
                fmt(after_e));

  for (const ArgSet& ej : after_e.extensions)
    if (!ej.count(add.z))
      v.require(is_admissible(f, ej), "L2",
                fmt(ej) + " admissible in before-graph", "not admissible");

  if (!z_attacks_g)
    for (const ArgSet& ej : after_e.extensions)
      if (!ej.empty()) {
        ArgSet stripped = ej;
        stripped.erase(add.z);
        v.require(is_admissible(f, stripped), "L3",
                  fmt(stripped) + " admissible in before-graph",
                  "not admissible");
      }

  // Table 4 necessary conditions, used contrapositively.
  switch (report.structural) {
    case StructuralProperty::Destructive:
      v.require(!single_empty && z_att && after.has_odd_cycle() &&
                    view.z_attacks_all_unattacked(),
                "T4-destructive-cn",
                "destructive addition meets its necessary condition",
                "condition false");
      break;
    case StructuralProperty::Questioning:
      v.require(after.has_even_cycle() && z_attacks_g, "T4-questioning-cn",
                "even cycle after change and z attacks the graph",
                "condition false");
      break;
    case StructuralProperty::Restrictive:
      v.require(f.has_even_cycle() && z_attacks_some, "T4-restrictive-cn",
                "even cycle before change and z attacks an extension",
                "condition false");
      break;
    case StructuralProperty::Altering:
      v.require(!single_empty && z_attacks_some, "T4-altering-cn",
                "z attacks some extension", "condition false");
      break;
    default:
      break;
  }
}

}  // namespace

ConditionReport evaluate_grounded_conditions(const Framework& f,
                                             const Change& c) {
  const AddArgument& ch = expect_add_argument(c);
  AddedArgumentView v{f, ch};
  Framework after = apply(f, c);
  ArgSet e = grounded(f).extensions.front();
  bool e_empty = e.empty();
  bool z_att = v.z_attacked();
  bool z_attacks_e = v.z_attacks(e);
  bool e_defends_z = v.defends_z(e);

  ReportBuilder b;
  b.report.semantics = SemanticsKind::Grounded;

  // Decisive and destructive are full iffs here: the same predicate is
  // CS and CN.
  if (e_empty && !z_att)
    b.fire("decisive", "P9-iff");
  else
    b.fail_cn("decisive", "P9-iff");

  b.fail_cn("restrictive", "P12");
  b.fail_cn("questioning", "P12");

  if (!e_empty && v.z_attacks_all_unattacked() && z_att)
    b.fire("destructive", "P13-iff");
  else
    b.fail_cn("destructive", "P13-iff");

  if (!e_empty && !z_attacks_e && e_defends_z)
    b.fire("expansive", "P11");

  if (e_empty && z_att)
    b.fire("conservative", "P9-iff");
  if (!e_empty && !z_attacks_e && !e_defends_z)
    b.fire("conservative", "P11");

  if (!(!e_empty && z_attacks_e))
    b.fail_cn("altering", "P10");

  // Under the grounded semantics skeptical monotony is monotony.
  if (e_empty) {
    b.fire("monotony", "T5");
    b.fire("skeptical_monotony", "T5");
  }
  if (!e_empty && !z_attacks_e) {
    b.fire("monotony", "P10");
    b.fire("skeptical_monotony", "P10");
  }

  if (!z_att)
    b.fire("priority_to_recency", "P8");
  if (!e_empty && !z_attacks_e && e_defends_z)
    b.fire("priority_to_recency", "C2");

  for (const ArgumentId& x : e)
    if (!after.indirectly_attacks(ch.z, x))
      b.fire("partial_monotony(" + x.name() + ")", "P7");

  return b.report;
}

ConditionReport evaluate_preferred_conditions(const Framework& f,
                                              const Change& c) {
  const AddArgument& ch = expect_add_argument(c);
  AddedArgumentView v{f, ch};
  Framework after = apply(f, c);
  ExtensionSet e = preferred(f);
  bool single_empty = e.single_empty();
  bool z_att = v.z_attacked();
  bool z_attacks_g = v.z_attacks_graph();
  bool z_attacks_some =
      std::any_of(e.extensions.begin(), e.extensions.end(),
                  [&](const ArgSet& ei) { return v.z_attacks(ei); });
  bool all_defend =
      std::all_of(e.extensions.begin(), e.extensions.end(),
                  [&](const ArgSet& ei) { return v.defends_z(ei); });
  bool none_defends =
      std::none_of(e.extensions.begin(), e.extensions.end(),
                   [&](const ArgSet& ei) { return v.defends_z(ei); });
  bool no_controversial =
      std::none_of(f.arguments().begin(), f.arguments().end(),
                   [&](const ArgumentId& x) { return f.is_controversial(x); });

  ReportBuilder b;
  b.report.semantics = SemanticsKind::Preferred;

  if (single_empty && !z_att && !f.has_even_cycle())
    b.fire("decisive", "P16");
  if (single_empty && !z_attacks_g)
    b.fail_cn("decisive", "P17");

  if (!(f.has_even_cycle() && z_attacks_some))
    b.fail_cn("restrictive", "P15");

  if (!(after.has_even_cycle() && z_attacks_g))
    b.fail_cn("questioning", "P17-P18");

  if (!single_empty && z_att && !after.has_even_cycle() &&
      v.z_attacks_all_unattacked())
    b.fire("destructive", "P21");
  if (!(!single_empty && z_att && after.has_odd_cycle() &&
        v.z_attacks_all_unattacked()))
    b.fail_cn("destructive", "T4");

  if (!single_empty && !z_attacks_g && all_defend)
    b.fire("expansive", "P18");

  if (single_empty && !z_attacks_g)
    b.fire("conservative", "P17");
  if (!single_empty && !z_attacks_g && none_defends)
    b.fire("conservative", "P18");

  if (!(!single_empty && z_attacks_some))
    b.fail_cn("altering", "P15");

  if (!z_attacks_some)
    b.fire("monotony", "P19");

  if (no_controversial && !v.z_attacks(e.intersection_of()))
    b.fire("skeptical_monotony", "P20");

  if (!z_att)
    b.fire("priority_to_recency", "P14");
  if (!z_attacks_some && all_defend)
    b.fire("priority_to_recency", "C3");

  return b.report;
}

std::optional<ArgSet> grounded_closed_forms(const Framework& f,
                                            const Change& c) {
  const AddArgument& ch = expect_add_argument(c);
  AddedArgumentView v{f, ch};
  ArgSet e = grounded(f).extensions.front();
  Framework after = apply(f, c);
  if (e.empty()) {
    if (v.z_attacked())
      return std::nullopt;
    return iterate_from_z(after, ch.z);
  }
  if (v.z_attacks(e) || !v.defends_z(e))
    return std::nullopt;
  ArgSet result = iterate_from_z(after, ch.z);
  result.insert(e.begin(), e.end());
  return result;
}

std::vector<Violation> verify_propositions(const Framework& f, const Change& c,
                                           SemanticsKind k) {
  std::vector<Violation> out;
  Verifier v{f, c, out};

  Framework after = apply(f, c);
  ExtensionSet before_e = extensions(f, k);
  ExtensionSet after_e = extensions(after, k);
  ClassificationReport report = classify(f, before_e, after_e, c);
  auto is = [&](StructuralProperty p) { return report.structural == p; };

  // Connections between structural and status-based properties.
  if (is(StructuralProperty::Conservative) || is(StructuralProperty::Expansive))
    v.require(report.monotony && report.skeptical_monotony, "P3",
              "conservative/expansive change is monotone",
              "monotony=" + std::to_string(report.monotony) + " skeptical=" +
                  std::to_string(report.skeptical_monotony));
  if (is(StructuralProperty::Decisive) && report.monotony)
    v.require(report.skeptical_monotony, "P3",
              "decisive+monotone implies skeptical monotony", "false");
  if (k == SemanticsKind::Grounded) {
    bool kept = is(StructuralProperty::Decisive) ||
                is(StructuralProperty::Expansive) ||
                is(StructuralProperty::Conservative);
    v.require(report.monotony == kept, "P3",
              "monotony iff decisive/expansive/conservative",
              to_string(report.structural) + " monotony=" +
                  std::to_string(report.monotony));
  }
  if (is(StructuralProperty::Destructive) || is(StructuralProperty::Altering) ||
      is(StructuralProperty::Restrictive))
    v.require(!report.monotony, "P4",
              to_string(report.structural) + " change is never monotone",
              "monotony=true");

  if (const auto* add = std::get_if<AddArgument>(&c)) {
    bool priority = report.priority_to_recency.value_or(false);
    if (is(StructuralProperty::Conservative) ||
        is(StructuralProperty::Destructive))
      v.require(!priority, "P5",
                to_string(report.structural) +
                    " addition never satisfies priority to recency",
                "priority=true");
    if (is(StructuralProperty::Expansive))
      v.require(priority, "P6",
                "expansive addition satisfies priority to recency",
                "priority=false");

    AddedArgumentView view{f, *add};
    if ((!view.z_attacked() || !view.z_attacks_graph()) && f.size() <= 10)
      v.require(f.simple_cycles() == after.simple_cycles(), "L1",
                "one-sided addition introduces no new cycle",
                "cycle sets differ");

    if (k == SemanticsKind::Grounded)
      verify_grounded_addition(v, f, *add, after, before_e, after_e, report);
    if (k == SemanticsKind::Preferred)
      verify_preferred_addition(v, f, *add, after, before_e, after_e, report);
  }
  return out;
}

}  // namespace argdyn
