#include "cnl/executor.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "cnl/errors.hpp"
#include "cnl/inference.hpp"
#include "cnl/text_util.hpp"

namespace cnl {

std::string Eventuality::render() const {
  return std::string(is_event ? "event " : "state ") + std::to_string(id) +
         ": " + core.render();
}

void InterfaceRegistry::add(const Interface& interface) {
  for (const Interface& held : interfaces_)
    if (held.pred == interface.pred && held.arity == interface.arity)
      throw DuplicateInterfaceError(interface.pred, interface.arity);
  interfaces_.push_back(interface);
}

const Interface* InterfaceRegistry::find(const std::string& pred,
                                         int arity) const {
  for (const Interface& held : interfaces_)
    if (held.pred == pred && held.arity == arity) return &held;
  return nullptr;
}

ScriptedIo::ScriptedIo(std::vector<std::string> replies)
    : replies_(replies.begin(), replies.end()) {}

std::optional<std::string> ScriptedIo::prompt_read(const std::string& prompt) {
  transcript_.push_back(prompt);
  if (replies_.empty()) return std::nullopt;
  std::string reply = replies_.front();
  replies_.pop_front();
  transcript_.push_back("> " + reply);
  return reply;
}

std::optional<bool> ScriptedIo::confirm(const std::string& question) {
  auto reply = prompt_read(question);
  if (!reply) return std::nullopt;
  std::string folded = to_lower(trim(*reply));
  return folded == "yes" || folded == "y" || folded == "true";
}

void ScriptedIo::emit(const std::string& line) {
  transcript_.push_back(line);
}

std::optional<std::string> StreamIo::prompt_read(const std::string& prompt) {
  out_ << prompt << "\n";
  std::string reply;
  if (!std::getline(in_, reply)) return std::nullopt;
  return reply;
}

std::optional<bool> StreamIo::confirm(const std::string& question) {
  auto reply = prompt_read(question + " (yes/no)");
  if (!reply) return std::nullopt;
  std::string folded = to_lower(trim(*reply));
  return folded == "yes" || folded == "y" || folded == "true";
}

void StreamIo::emit(const std::string& line) { out_ << line << "\n"; }

int Timeline::add(const Eventuality& eventuality) {
  Eventuality held = eventuality;
  held.id = static_cast<int>(items_.size()) + 1;
  if (!held.is_event) {
    // A reported state holds around the most recent event.
    for (auto it = items_.rbegin(); it != items_.rend(); ++it)
      if (it->is_event) {
        overlaps_.push_back({held.id, it->id});
        break;
      }
  }
  items_.push_back(held);
  return held.id;
}

void Timeline::add_edge(int from_id, int to_id) {
  edges_.push_back({from_id, to_id});
}

namespace {

std::string time_name(int id) { return "t" + std::to_string(id); }
std::string eventuality_name(const Eventuality& e) {
  return (e.is_event ? "e" : "s") + std::to_string(e.id);
}

}  // namespace

std::vector<Literal> Timeline::facts() const {
  std::vector<Literal> out;
  for (const Eventuality& e : items_) {
    if (e.is_event) {
      out.push_back(
          {true, "cul", {Term::sym(eventuality_name(e)), Term::sym(time_name(e.id))}});
      out.push_back(
          {true, "at", {Term::sym(time_name(e.id)), Term::integer(e.group)}});
    }
  }
  // Covering precedes pairs: each event to the events of the next group.
  std::set<int> groups;
  for (const Eventuality& e : items_)
    if (e.is_event) groups.insert(e.group);
  for (const Eventuality& a : items_) {
    if (!a.is_event) continue;
    auto next = groups.upper_bound(a.group);
    if (next == groups.end()) continue;
    for (const Eventuality& b : items_)
      if (b.is_event && b.group == *next)
        out.push_back({true,
                       "precedes",
                       {Term::sym(time_name(a.id)), Term::sym(time_name(b.id))}});
  }
  for (const auto& [from, to] : edges_)
    out.push_back(
        {true, "precedes", {Term::sym(time_name(from)), Term::sym(time_name(to))}});
  for (const auto& [state, event] : overlaps_)
    out.push_back({true,
                   "overlaps",
                   {Term::sym(eventuality_name(items_[state - 1])),
                    Term::sym(time_name(event))}});
  return out;
}

std::vector<int> Timeline::order() const {
  size_t n = items_.size();
  std::vector<std::set<int>> out_edges(n + 1);
  std::vector<int> indegree(n + 1, 0);
  auto connect = [&](int from, int to) {
    if (from == to) throw CyclicTimelineError();
    if (out_edges[from].insert(to).second) ++indegree[to];
  };
  for (const Eventuality& a : items_)
    for (const Eventuality& b : items_)
      if (a.is_event && b.is_event && a.group < b.group) connect(a.id, b.id);
  for (const auto& [from, to] : edges_) {
    if (from < 1 || to < 1 || from > static_cast<int>(n) ||
        to > static_cast<int>(n))
      continue;
    connect(from, to);
  }
  std::set<int> ready;
  for (int id = 1; id <= static_cast<int>(n); ++id)
    if (indegree[id] == 0) ready.insert(id);
  std::vector<int> order;
  while (!ready.empty()) {
    // Smallest id first: unordered eventualities keep text order.
    int id = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(id);
    for (int next : out_edges[id])
      if (--indegree[next] == 0) ready.insert(next);
  }
  if (order.size() != n) throw CyclicTimelineError();
  return order;
}

Executor::Executor(const KnowledgeBase& kb, const InterfaceRegistry& interfaces,
                   IoChannel& io, int depth_limit)
    : kb_(kb), interfaces_(interfaces), io_(io), depth_limit_(depth_limit) {}

namespace {

Clause fact_clause(const Literal& lit, int sentence) {
  Clause c;
  c.head = lit;
  c.origin = Provenance{"scenario", sentence};
  return c;
}

// A typed reply: digits make an integer, anything else a lowercase symbol.
Term reply_term(const std::string& reply) {
  std::string text = trim(reply);
  bool digits = !text.empty();
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
  if (digits) return Term::integer(std::stol(text));
  std::string folded = to_lower(text);
  std::replace(folded.begin(), folded.end(), ' ', '_');
  return Term::sym(folded);
}

}  // namespace

ExecutionTrace Executor::run(const Timeline& timeline,
                             const std::vector<Clause>& overlay) const {
  ExecutionTrace trace;
  trace.session_facts = overlay;
  std::vector<Clause> combined = kb_.clauses();
  combined.insert(combined.end(), overlay.begin(), overlay.end());

  auto provable = [&](const Literal& goal) {
    Solver solver(combined, depth_limit_);
    return solver.solve({goal}, 1).answer == Answer::kYes;
  };
  auto record = [&](const Literal& fact, int sentence) {
    Clause c = fact_clause(fact, sentence);
    combined.push_back(c);
    trace.session_facts.push_back(c);
  };

  for (int id : timeline.order()) {
    const Eventuality& ev = timeline.eventualities()[id - 1];
    TraceStep step;
    step.event = ev.id;
    step.fact = ev.core;

    if (!ev.is_event) {
      if (provable(ev.core)) {
        step.how = TraceStep::How::kState;
      } else {
        std::string question = "Is " + ev.core.render() + " true?";
        auto ok = io_.confirm(question);
        if (!ok || !*ok)
          throw ExecutionStuckError(ev.render(), ev.core.render());
        step.how = TraceStep::How::kConfirmed;
        step.prompt = question;
        step.reply = "yes";
        record(ev.core, ev.sentence);
      }
      trace.steps.push_back(step);
      continue;
    }

    const Interface* handler =
        interfaces_.find(ev.core.pred, static_cast<int>(ev.core.args.size()));
    if (handler) {
      auto reply = io_.prompt_read(handler->prompt);
      if (!reply)
        throw ExecutionStuckError(ev.render(),
                                  "a reply to \"" + handler->prompt + "\"");
      step.how = TraceStep::How::kInterface;
      step.prompt = handler->prompt;
      step.reply = *reply;
      Literal fact = ev.core;
      if (handler->output_arg >= 0 &&
          handler->output_arg < static_cast<int>(fact.args.size()) &&
          fact.args[handler->output_arg].kind() == Term::Kind::kVar)
        fact.args[handler->output_arg] = reply_term(*reply);
      step.fact = fact;
      record(fact, ev.sentence);
    } else if (provable(ev.core)) {
      step.how = TraceStep::How::kProved;
      record(ev.core, ev.sentence);
    } else {
      std::string question = "Is " + ev.core.render() + " true?";
      auto ok = io_.confirm(question);
      if (!ok || !*ok) throw ExecutionStuckError(ev.render(), ev.core.render());
      step.how = TraceStep::How::kConfirmed;
      step.prompt = question;
      step.reply = "yes";
      record(ev.core, ev.sentence);
    }
    trace.steps.push_back(step);
  }
  return trace;
}

}  // namespace cnl
