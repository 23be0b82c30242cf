#include "agw/engine.hpp"

#include <sstream>

#include "agw/analysis.hpp"
#include "agw/error.hpp"

namespace agw {

void Budget::validate() const {
  if (max_steps == kUnlimited && max_cells == kUnlimited && max_extent == kUnlimited && max_results == kUnlimited)
    throw ValidationError("budget needs at least one finite cap");
}

void sort_arrays(std::vector<Array1D>& arrays) {
  std::vector<std::pair<std::string, Array1D>> keyed;
  keyed.reserve(arrays.size());
  for (auto& a : arrays) keyed.emplace_back(render_array(a), std::move(a));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());
  arrays.clear();
  for (auto& [text, a] : keyed) arrays.push_back(std::move(a));
}

std::string serialize_lang(const LangResult& r) {
  std::string out;
  for (const auto& a : r.arrays) out += render_array(a) + '\n';
  out += r.complete ? "complete: true\n" : "complete: false\n";
  return out;
}

std::string describe_search(const LangResult& r) {
  std::ostringstream os;
  os << "results: " << r.arrays.size() << '\n';
  os << "states: " << r.states << '\n';
  os << "excluded: " << r.excluded << '\n';
  os << "pruned: " << r.pruned << '\n';
  if (r.first_excluded) os << "first_excluded: " << *r.first_excluded << '\n';
  if (r.truncation) os << "truncation: " << *r.truncation << '\n';
  if (r.step_cut) os << "step_cut: " << *r.step_cut << '\n';
  os << "complete: " << (r.complete ? "true" : "false") << '\n';
  return os.str();
}

namespace {

detail::Expansion<Array1D> expand(const Grammar& g, const Array1D& a) {
  detail::Expansion<Array1D> e;
  const auto& rules = g.rule_set().rules();
  g.rule_set().for_each_match(a, [&](std::size_t r, Position v) { e.next.push_back(rules[r].apply_at(a, v)); });
  e.halting = e.next.empty();
  return e;
}

LangResult run(const Grammar& g, const Budget& b, unsigned jobs, const DeadStateFilter& filter,
               bool (*keep)(const Grammar&, const Array1D&, bool)) {
  b.validate();
  LangResult out;
  out.cell_cap = b.max_cells;
  auto stats = detail::breadth_first<Array1D, ArrayHash>(
      g.axiom(), b, jobs,
      [&](const Array1D& a) {
        auto e = expand(g, a);
        detail::drop_dead(e, [&](const Array1D& n) { return filter.dead(n, 0); });
        return e;
      }, [](const Array1D& a) -> const Array1D& { return a; },
      [](const Array1D& a) { return render_array(a); },
      [&](const Array1D& a, const detail::Expansion<Array1D>& e) {
        if (!keep(g, a, e.halting)) return false;
        out.arrays.push_back(a);
        return true;
      });
  sort_arrays(out.arrays);
  out.complete = stats.complete;
  out.states = stats.states;
  out.excluded = stats.excluded;
  out.pruned = stats.pruned;
  out.first_excluded = std::move(stats.first_excluded);
  out.truncation = std::move(stats.truncation);
  out.step_cut = std::move(stats.step_cut);
  return out;
}

}  // namespace

std::vector<Array1D> successors(const Grammar& g, const Array1D& a) {
  auto next = expand(g, a).next;
  sort_arrays(next);
  return next;
}

bool is_halting(const Grammar& g, const Array1D& a) { return !g.rule_set().any_match(a); }

LangResult reach(const Grammar& g, const Budget& b, unsigned jobs) {
  return run(g, b, jobs, DeadStateFilter{}, [](const Grammar&, const Array1D&, bool) { return true; });
}

LangResult language(const Grammar& g, Mode mode, const Budget& b, unsigned jobs) {
  const DeadStateFilter filter = b.prune_dead ? DeadStateFilter(g, mode == Mode::t) : DeadStateFilter{};
  if (mode == Mode::star)
    return run(g, b, jobs, filter, [](const Grammar& gr, const Array1D& a, bool) { return gr.is_terminal_array(a); });
  return run(g, b, jobs, filter,
             [](const Grammar& gr, const Array1D& a, bool halting) { return halting && gr.is_terminal_array(a); });
}

}  // namespace agw
