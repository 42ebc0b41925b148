// Simulation of scenario sentences: eventualities on a timeline, ordered
// execution that grounds each event by proof, registered interface, or a
// user confirmation.
#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "cnl/kb.hpp"
#include "cnl/logic.hpp"

namespace cnl {

// An event or state reported by a scenario sentence. Events in a later
// group happen strictly after events in an earlier one; events sharing a
// group are unordered and fall back to text order.
struct Eventuality {
  int id = 0;
  bool is_event = true;
  bool progressive = false;
  Literal core;
  int group = 0;
  int sentence = 0;

  std::string render() const;
};

// A device handler: executing a matching event prompts the user and reads
// the value standing in the output argument position.
struct Interface {
  std::string pred;
  int arity = 0;
  std::string prompt;
  int output_arg = 0;
};

class InterfaceRegistry {
 public:
  // One handler per predicate and arity; repeats raise.
  void add(const Interface& interface);
  const Interface* find(const std::string& pred, int arity) const;
  const std::vector<Interface>& interfaces() const { return interfaces_; }

 private:
  std::vector<Interface> interfaces_;
};

// Question-and-answer channel used during a run.
class IoChannel {
 public:
  virtual ~IoChannel() = default;
  // Shows the prompt, returns the reply line; nullopt when input ran dry.
  virtual std::optional<std::string> prompt_read(const std::string& prompt) = 0;
  // Yes/no question; nullopt when input ran dry.
  virtual std::optional<bool> confirm(const std::string& question) = 0;
  virtual void emit(const std::string& line) = 0;
};

// Canned replies for batch runs and tests; records the full transcript.
class ScriptedIo : public IoChannel {
 public:
  explicit ScriptedIo(std::vector<std::string> replies);

  std::optional<std::string> prompt_read(const std::string& prompt) override;
  std::optional<bool> confirm(const std::string& question) override;
  void emit(const std::string& line) override;

  const std::vector<std::string>& transcript() const { return transcript_; }

 private:
  std::deque<std::string> replies_;
  std::vector<std::string> transcript_;
};

class StreamIo : public IoChannel {
 public:
  StreamIo(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::optional<std::string> prompt_read(const std::string& prompt) override;
  std::optional<bool> confirm(const std::string& question) override;
  void emit(const std::string& line) override;

 private:
  std::istream& in_;
  std::ostream& out_;
};

// The temporal skeleton of a scenario. Ordering edges come from sequence
// groups plus any explicit edges; states take no part in the ordering and
// overlap the latest event added before them.
class Timeline {
 public:
  int add(const Eventuality& eventuality);
  void add_edge(int from_id, int to_id);

  const std::vector<Eventuality>& eventualities() const { return items_; }
  bool empty() const { return items_.empty(); }

  // cul/at for events, overlaps for states, precedes between groups.
  std::vector<Literal> facts() const;

  // Execution order of all eventualities: a topological order of the edges
  // with text-order ties. Raises CyclicTimelineError.
  std::vector<int> order() const;

 private:
  std::vector<Eventuality> items_;
  std::vector<std::pair<int, int>> edges_;  // explicit id -> id
  std::vector<std::pair<int, int>> overlaps_;
};

struct TraceStep {
  enum class How { kInterface, kProved, kConfirmed, kState };
  int event = 0;
  How how = How::kProved;
  Literal fact;
  std::string prompt;  // interface prompt, when one was shown
  std::string reply;
};

struct ExecutionTrace {
  std::vector<TraceStep> steps;
  std::vector<Clause> session_facts;  // overlay plus facts recorded by the run
};

// Runs a timeline against the knowledge base. The overlay carries the
// scenario's cast; event facts enter it only when their event fires.
class Executor {
 public:
  Executor(const KnowledgeBase& kb, const InterfaceRegistry& interfaces,
           IoChannel& io, int depth_limit);

  ExecutionTrace run(const Timeline& timeline,
                     const std::vector<Clause>& overlay) const;

 private:
  const KnowledgeBase& kb_;
  const InterfaceRegistry& interfaces_;
  IoChannel& io_;
  int depth_limit_;
};

}  // namespace cnl
