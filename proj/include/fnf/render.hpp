#ifndef FNF_RENDER_HPP
#define FNF_RENDER_HPP

#include <string>
#include <vector>

#include "fnf/arch.hpp"
#include "fnf/lang.hpp"
#include "fnf/trace.hpp"

namespace fnf {

/// Letter labels for events, assigned in (pid, eid) order across the
/// expanded programs; a shadow event carries a prime after its main
/// event's letter, e.g. a and a'.
class Labeler {
 public:
  explicit Labeler(const std::vector<Program>& expanded);

  std::string label(const Event& e) const;

 private:
  std::vector<int> base_;
};

/// "(ac)(bd)(a'c')" style rendering of a step sequence.
std::string render_steps(const Labeler& lab, const std::vector<Step>& steps);

/// Decompose a normal execution and render it with step brackets.
std::string render_bracketed(const Architecture& arch, const Labeler& lab,
                             const Execution& es);

/// Flat rendering without brackets, e.g. "acbd".
std::string render_flat(const Labeler& lab, const Execution& es);

}  // namespace fnf

#endif
