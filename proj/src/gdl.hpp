#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace fgeo {

// ---------------------------------------------------------------------------
// Geometric Definition Language (predicate / attribute / theorem schemas) and
// Conditional Declaration Language (problem statements). Parsing is pure and
// reentrant; parsed schemas are immutable and shared across searches.
// ---------------------------------------------------------------------------

using PointId = uint8_t;

// Leaf argument of a fact template or attribute application: a ground point
// (>= 0, problem point id) or a schema variable (< 0).
using Slot = int16_t;
inline Slot ground_slot(PointId p) { return static_cast<Slot>(p); }
inline Slot var_slot(int v) { return static_cast<Slot>(-(v + 1)); }
inline bool slot_is_var(Slot s) { return s < 0; }
inline int slot_var(Slot s) { return -static_cast<int>(s) - 1; }

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ":" + std::to_string(col_) +
                             ": " + msg),
          line(line_), col(col_) {}
};

// Parameter permutation: out[i] = in[perm[i]].
using Perm = std::vector<uint8_t>;

enum class TermOp { Const, Attr, Add, Sub, Mul, Div, Pow, Sqrt };

// Expression over attribute applications and exact rationals. Templates carry
// variable slots; ground terms carry point ids only.
struct Term {
    TermOp op = TermOp::Const;
    Rat value;                // Const payload; Pow exponent lives in args[1]
    int attr = -1;            // Attr: index into Gdl::attributes
    std::vector<Slot> slots;  // Attr arguments
    std::vector<Term> args;   // operator arguments

    static Term constant(Rat v) {
        Term t;
        t.op = TermOp::Const;
        t.value = std::move(v);
        return t;
    }
    static Term attribute(int attr_idx, std::vector<Slot> s) {
        Term t;
        t.op = TermOp::Attr;
        t.attr = attr_idx;
        t.slots = std::move(s);
        return t;
    }
    static Term binary(TermOp op, Term a, Term b) {
        Term t;
        t.op = op;
        t.args.push_back(std::move(a));
        t.args.push_back(std::move(b));
        return t;
    }
    static Term sqrt(Term a) {
        Term t;
        t.op = TermOp::Sqrt;
        t.args.push_back(std::move(a));
        return t;
    }
    bool is_ground() const;
    void collect_vars(std::vector<int>& out) const;
};

struct FactTemplate {
    int pred = -1;  // index into Gdl::predicates
    std::vector<Slot> slots;
};

struct EquationTemplate {
    Term lhs, rhs;
};

// One premise conjunct or conclusion item.
struct Pattern {
    bool is_fact = true;
    FactTemplate fact;
    EquationTemplate eq;
};

struct PredicateSchema {
    std::string name;
    int arity = 0;
    std::vector<Perm> reps;        // full group, identity first
    std::vector<FactTemplate> extensions;
};

enum class Unit { Degrees, Length, Area, Scalar };

struct AttributeSchema {
    std::string name;
    int arity = 0;
    std::vector<Perm> reps;  // full group, identity first
    Unit unit = Unit::Scalar;
};

struct TheoremBranch {
    std::vector<Pattern> premise;      // nonempty
    std::vector<Pattern> conclusions;  // vars must appear in this branch's premise
    std::vector<int> used_vars;        // sorted variable indices referenced by the branch
};

struct TheoremSchema {
    std::string name;
    std::vector<std::string> variables;
    std::vector<TheoremBranch> branches;  // dense, index i == "branch i+1" in source
};

// A theorem-branch pair: the unit of the action space.
struct Action {
    int theorem = -1;
    int branch = 0;  // 1-based, matching the source syntax
    bool operator==(const Action& o) const { return theorem == o.theorem && branch == o.branch; }
    auto operator<=>(const Action&) const = default;
};

struct Gdl {
    std::vector<PredicateSchema> predicates;
    std::vector<AttributeSchema> attributes;
    std::vector<TheoremSchema> theorems;
    std::map<std::string, int> predicate_index;
    std::map<std::string, int> attribute_index;
    std::map<std::string, int> theorem_index;

    // branch-actions in declaration order (theorem order, then branch)
    std::vector<Action> actions;
    std::map<std::pair<int, int>, int> action_rank;  // (theorem, branch) -> index

    // name-lexicographic ranks, used for canonical symbol/fact ordering
    std::vector<int> attr_name_rank;
    std::vector<int> pred_name_rank;

    int action_count() const { return static_cast<int>(actions.size()); }
    std::string action_name(const Action& a) const {
        return theorems[a.theorem].name + ":" + std::to_string(a.branch);
    }
    std::optional<Action> parse_action(const std::string& theorem, int branch) const;
    void build_tables();
};

// Ground relational fact. Canonical form: representation-minimal point tuple.
struct Fact {
    int pred = -1;
    std::vector<PointId> pts;
    bool operator==(const Fact& o) const = default;
    auto operator<=>(const Fact&) const = default;
};

struct Goal {
    enum class Kind { Relation, Value, Equation } kind = Kind::Value;
    Fact fact;                  // Relation
    Term term;                  // Value
    std::optional<Rat> target;  // Value, optional
    Term eq_lhs, eq_rhs;        // Equation
};

struct ProblemCDL {
    std::vector<std::string> points;  // sorted; PointId == index
    std::vector<Fact> construction;   // canonical ground facts
    std::vector<EquationTemplate> conditions;  // ground equations
    Goal goal;

    int point_id(const std::string& name) const;
};

// Minimal tuple across the representation group (identity included).
std::vector<PointId> canonical_points(const std::vector<Perm>& reps,
                                      const std::vector<PointId>& pts);

Fact canonical_fact(const Gdl& gdl, const Fact& f);

// --- parsing ---
Gdl parse_gdl(const std::string& source);
ProblemCDL parse_cdl(const std::string& source, const Gdl& gdl);

// Ground term / fact / equation readers for the JSON problem format (same
// grammar as CDL expressions). `points` must be the problem's sorted list.
Term parse_ground_term(const std::string& text, const Gdl& gdl,
                       const std::vector<std::string>& points);
EquationTemplate parse_ground_equation(const std::string& text, const Gdl& gdl,
                                       const std::vector<std::string>& points);

// --- printing (canonical form; reparses to a structurally identical AST) ---
std::string print_gdl(const Gdl& gdl);
std::string print_cdl(const ProblemCDL& p, const Gdl& gdl);
std::string print_term(const Term& t, const Gdl& gdl, const std::vector<std::string>& points);
std::string print_fact(const Fact& f, const Gdl& gdl, const std::vector<std::string>& points);

}  // namespace fgeo
