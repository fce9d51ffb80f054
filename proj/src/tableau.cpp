#include "trel/tableau.hpp"

#include <algorithm>
#include <tuple>

#include "trel/error.hpp"

namespace trel {

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::Root: return "root";
    case Rule::And: return "and";
    case Rule::NotOr: return "not-or";
    case Rule::NotImplies: return "not-implies";
    case Rule::DoubleNegation: return "not-not";
    case Rule::Or: return "or";
    case Rule::NotAnd: return "not-and";
    case Rule::Implies: return "implies";
  }
  return "";
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Default: return "default";
    case Strategy::Reversed: return "reversed";
    case Strategy::Exhaustive: return "exhaustive";
  }
  return "";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::ProvedTrue: return "PROVED_TRUE";
    case Outcome::ProvedNotFalse: return "PROVED_NOT_FALSE";
    case Outcome::Open: return "OPEN";
  }
  return "";
}

namespace {

// One rule application: up to two results, on one branch (alpha) or one
// per side (beta).
struct Parts {
  Rule rule;
  bool branching;
  std::optional<Formula> first;
  std::optional<Formula> second;
};

std::optional<Parts> split(const Formula& f) {
  switch (f.connective()) {
    case Connective::Var:
      return std::nullopt;
    case Connective::And:
      return Parts{Rule::And, false, f.lhs(), f.rhs()};
    case Connective::Or:
      return Parts{Rule::Or, true, f.lhs(), f.rhs()};
    case Connective::Implies:
      return Parts{Rule::Implies, true, Formula::negation(f.lhs()), f.rhs()};
    case Connective::Not:
      break;
  }
  const Formula& inner = f.operand();
  switch (inner.connective()) {
    case Connective::Var:
      return std::nullopt;
    case Connective::Not:
      return Parts{Rule::DoubleNegation, false, inner.operand(), std::nullopt};
    case Connective::Or:
      return Parts{Rule::NotOr, false, Formula::negation(inner.lhs()),
                   Formula::negation(inner.rhs())};
    case Connective::Implies:
      return Parts{Rule::NotImplies, false, inner.lhs(), Formula::negation(inner.rhs())};
    case Connective::And:
      return Parts{Rule::NotAnd, true, Formula::negation(inner.lhs()),
                   Formula::negation(inner.rhs())};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Expansion> expand(const Formula& f) {
  auto parts = split(f);
  if (!parts) return std::nullopt;
  Expansion e{parts->rule, parts->branching, {*parts->first}, {}};
  if (parts->second) (parts->branching ? e.right : e.left).push_back(*parts->second);
  return e;
}

namespace {

using Mask = std::uint64_t;

// Literal node on a branch.
struct Literal {
  std::size_t slot;
  bool positive;
  NodeId id;
};

// Candidates waiting for expansion; consumed from the front or the back.
struct Queue {
  std::vector<NodeId> items;
  std::size_t head = 0;

  bool empty() const noexcept { return head == items.size(); }
};

struct BranchState {
  std::vector<NodeId> path;
  Queue alpha;
  Queue beta;
  std::vector<Literal> literals;
  // Nodes added by the most recent rule application.
  std::vector<NodeId> fresh;
};

bool is_branching(const Formula& f) {
  switch (f.connective()) {
    case Connective::Or:
    case Connective::Implies: return true;
    case Connective::Not: return f.operand().connective() == Connective::And;
    default: return false;
  }
}

struct Candidate {
  NodeId first;
  NodeId second;
  std::size_t slot;
};

// Keep only the inclusion-minimal masks.
std::vector<Mask> minimize(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Mask> out;
  for (Mask m : masks) {
    const bool covered = std::any_of(masks.begin(), masks.end(), [&](Mask other) {
      return other != m && (other & m) == other;
    });
    if (!covered) out.push_back(m);
  }
  return out;
}

class Builder {
 public:
  Builder(const Formula& formula, Strategy strategy, const Limits& limits)
      : formula_(formula), strategy_(strategy), limits_(limits), vars_(variables(formula)) {}

  TableauResult run() {
    if (strategy_ == Strategy::Exhaustive && vars_.size() > 63) {
      throw LimitError("exhaustive closing sets support at most 63 variables");
    }
    nodes_.reserve(2 * formula_.size() + 1);
    BranchState root;
    const NodeId id = add_node(Formula::negation(formula_), std::nullopt, Rule::Root, std::nullopt);
    admit(root, id);

    std::vector<BranchState> stack;
    stack.push_back(std::move(root));
    while (!stack.empty()) {
      BranchState state = std::move(stack.back());
      stack.pop_back();
      grow(std::move(state), stack);
    }
    return finish();
  }

 private:
  NodeId add_node(Formula f, std::optional<NodeId> parent, Rule rule, std::optional<NodeId> source) {
    if (nodes_.size() >= limits_.max_tableau_nodes) {
      throw LimitError("tableau exceeds the node budget of " +
                       std::to_string(limits_.max_tableau_nodes) +
                       " (raise it with --max-nodes or TREL_MAX_NODES)");
    }
    const auto id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back(TableauNode{id, std::move(f), parent, {}, rule, source});
    if (parent) nodes_[*parent].children.push_back(id);
    return id;
  }

  std::size_t slot_of(const Variable& v) const {
    return static_cast<std::size_t>(std::find(vars_.begin(), vars_.end(), v) - vars_.begin());
  }

  void admit(BranchState& state, NodeId id) {
    state.path.push_back(id);
    state.fresh.push_back(id);
    const Formula& f = nodes_[id].formula;
    if (f.is_variable()) {
      state.literals.push_back({slot_of(f.variable()), true, id});
    } else if (f.is_literal()) {
      state.literals.push_back({slot_of(f.operand().variable()), false, id});
    } else {
      (is_branching(f) ? state.beta : state.alpha).items.push_back(id);
    }
  }

  std::optional<Candidate> closing_pair(const BranchState& state) const {
    std::optional<Candidate> best;
    const bool reversed = strategy_ == Strategy::Reversed;
    auto better = [&](const Candidate& a, const Candidate& b) {
      const auto ka = std::tie(a.second, a.slot, a.first);
      const auto kb = std::tie(b.second, b.slot, b.first);
      return reversed ? ka > kb : ka < kb;
    };
    // Fresh literals sit at the end of the list, in admission order.
    const NodeId first_fresh = state.fresh.empty() ? 0 : state.fresh.front();
    for (auto it = state.literals.rbegin(); it != state.literals.rend(); ++it) {
      if (it->id < first_fresh) break;
      for (const Literal& other : state.literals) {
        if (other.slot != it->slot || other.positive == it->positive) continue;
        const Candidate c{std::min(it->id, other.id), std::max(it->id, other.id), it->slot};
        if (!best || better(c, *best)) best = c;
      }
    }
    return best;
  }

  Closure closure_of(const Candidate& c) const {
    const bool first_positive = nodes_[c.first].formula.is_variable();
    return Closure{vars_[c.slot], first_positive ? c.first : c.second,
                   first_positive ? c.second : c.first};
  }

  NodeId take(Queue& queue) const {
    if (strategy_ == Strategy::Reversed) {
      const NodeId id = queue.items.back();
      queue.items.pop_back();
      return id;
    }
    return queue.items[queue.head++];
  }

  void grow(BranchState state, std::vector<BranchState>& stack) {
    while (true) {
      if (strategy_ != Strategy::Exhaustive) {
        if (auto pair = closing_pair(state)) {
          branches_.push_back(Branch{std::move(state.path), closure_of(*pair)});
          return;
        }
      }
      state.fresh.clear();

      if (!state.alpha.empty()) {
        const NodeId source = take(state.alpha);
        Parts p = *split(nodes_[source].formula);
        admit(state, add_node(std::move(*p.first), state.path.back(), p.rule, source));
        if (p.second) {
          admit(state, add_node(std::move(*p.second), state.path.back(), p.rule, source));
        }
        continue;
      }

      if (!state.beta.empty()) {
        const NodeId source = take(state.beta);
        Parts p = *split(nodes_[source].formula);
        const NodeId parent = state.path.back();
        const NodeId left = add_node(std::move(*p.first), parent, p.rule, source);
        const NodeId right = add_node(std::move(*p.second), parent, p.rule, source);
        BranchState other = state;
        admit(state, left);
        admit(other, right);
        stack.push_back(std::move(other));
        stack.push_back(std::move(state));
        return;
      }

      // Saturated.
      if (strategy_ != Strategy::Exhaustive) {
        branches_.push_back(Branch{std::move(state.path), std::nullopt});
        return;
      }
      Mask positive = 0, negative = 0;
      for (const Literal& l : state.literals) (l.positive ? positive : negative) |= Mask{1} << l.slot;
      saturated_.push_back(
          Saturated{branches_.size(), positive & negative, std::move(state.literals)});
      branches_.push_back(Branch{std::move(state.path), std::nullopt});
      return;
    }
  }

  // Exhaustive: pick, per branch, the pair used to close it given the
  // chosen closing set.
  void assign_exhaustive_closures(Mask chosen) {
    for (const Saturated& s : saturated_) {
      std::optional<Candidate> best;
      for (const Literal& p : s.literals) {
        if (!p.positive || !((chosen >> p.slot) & 1)) continue;
        for (const Literal& n : s.literals) {
          if (n.positive || n.slot != p.slot) continue;
          const Candidate c{std::min(p.id, n.id), std::max(p.id, n.id), p.slot};
          if (!best || std::tie(c.second, c.slot, c.first) <
                           std::tie(best->second, best->slot, best->first)) {
            best = c;
          }
        }
      }
      if (best) branches_[s.branch].closure = closure_of(*best);
    }
  }

  VarSet set_of(Mask m) const {
    VarSet out;
    for (std::size_t slot = 0; slot < vars_.size(); ++slot) {
      if ((m >> slot) & 1) out.push_back(vars_[slot]);
    }
    return out;
  }

  TableauResult finish() {
    TableauResult result{formula_, strategy_, {}, {}, {}, {}, Outcome::Open};

    if (strategy_ == Strategy::Exhaustive) {
      const bool closes = std::all_of(saturated_.begin(), saturated_.end(),
                                      [](const Saturated& s) { return s.available != 0; });
      if (closes) {
        // Union of one choice per branch. Dropping non-minimal partial
        // unions keeps every minimal final union reachable.
        std::vector<Mask> unions{0};
        for (const Saturated& s : saturated_) {
          std::vector<Mask> next;
          for (Mask u : unions) {
            for (std::size_t slot = 0; slot < vars_.size(); ++slot) {
              if ((s.available >> slot) & 1) next.push_back(u | (Mask{1} << slot));
            }
          }
          unions = minimize(std::move(next));
        }
        std::vector<VarSet> sets;
        for (Mask m : unions) sets.push_back(set_of(m));
        std::sort(sets.begin(), sets.end(), [&](const VarSet& a, const VarSet& b) {
          return std::lexicographical_compare(
              a.begin(), a.end(), b.begin(), b.end(),
              [&](const Variable& x, const Variable& y) { return slot_of(x) < slot_of(y); });
        });
        const Mask chosen = [&] {
          Mask m = 0;
          for (const Variable& v : sets.front()) m |= Mask{1} << slot_of(v);
          return m;
        }();
        assign_exhaustive_closures(chosen);
        result.closing_sets = std::move(sets);
      }
    }

    const bool closed = std::all_of(branches_.begin(), branches_.end(),
                                    [](const Branch& b) { return b.is_closed(); });
    if (closed) {
      std::vector<bool> used(vars_.size(), false);
      for (const Branch& b : branches_) used[slot_of(b.closure->variable)] = true;
      for (std::size_t slot = 0; slot < vars_.size(); ++slot) {
        if (used[slot]) result.closing_set.push_back(vars_[slot]);
      }
      result.outcome = result.closing_set.size() == vars_.size() ? Outcome::ProvedTrue
                                                                 : Outcome::ProvedNotFalse;
    }
    result.nodes = std::move(nodes_);
    result.branches = std::move(branches_);
    return result;
  }

  struct Saturated {
    std::size_t branch;
    Mask available;
    std::vector<Literal> literals;
  };

  Formula formula_;
  Strategy strategy_;
  Limits limits_;
  VarSet vars_;
  std::vector<TableauNode> nodes_;
  std::vector<Branch> branches_;
  std::vector<Saturated> saturated_;
};

}  // namespace

TableauResult refute(const Formula& formula, Strategy strategy, const Limits& limits) {
  return Builder(formula, strategy, limits).run();
}

std::vector<VarSet> closing_sets_all(const Formula& formula, const Limits& limits) {
  return refute(formula, Strategy::Exhaustive, limits).closing_sets;
}

}  // namespace trel
