#ifndef FNF_ARCH_HPP
#define FNF_ARCH_HPP

#include <optional>
#include <string>

#include "fnf/events.hpp"

namespace fnf {

/// A processor's pending shadow events, newest first. Eids are strictly
/// decreasing front-to-back and all entries share one pid.
using Backlog = std::vector<Event>;

/// Behavioural specification of the execution environment. Four components:
///
///   shadows   -- whether an action runs in two stages (main + shadow event)
///   same_dep  -- ordering between events of one processor; irreflexive and
///                antisymmetric, holds only along increasing eids (or from a
///                main event to its own shadow)
///   diff_dep  -- dependence between events of different processors; takes
///                the two processors' backlogs in the current context
///   prec      -- fixed total order on events that can be independent; used
///                to pick one permutation of each step
///
/// Values are immutable and freely copyable.
class Architecture {
 public:
  enum class Model { SC, TSO, PSO, RMO };

  static Architecture sc() { return Architecture(Model::SC); }
  static Architecture tso() { return Architecture(Model::TSO); }
  static Architecture pso() { return Architecture(Model::PSO); }
  static Architecture rmo() { return Architecture(Model::RMO); }
  static std::optional<Architecture> by_name(const std::string& name);

  Model model() const { return model_; }
  std::string name() const;

  bool shadows(const Action& a) const;
  /// Same-processor dependence. Expects pid a == pid b.
  bool same_dep(const Event& a, const Event& b) const;
  /// Cross-processor dependence. x is a's backlog, y is b's, both taken at
  /// the context the pair is evaluated in. Expects pid a != pid b.
  bool diff_dep(const Backlog& x, const Backlog& y, const Event& a,
                const Event& b) const;
  bool prec(const Event& a, const Event& b) const;

 private:
  explicit Architecture(Model m) : model_(m) {}
  Model model_;
};

/// Mutual same_dep-independence of two events of one processor.
bool same_indep(const Architecture& arch, const Event& a, const Event& b);

/// Concurrent-read-exclusive-write: same location and at least one write.
bool crxw(const Event& a, const Event& b);

/// crxw' -- store-buffer variant. Global writes are shadow stores; a read is
/// global only if it accesses memory, i.e. its own backlog holds no pending
/// shadow store to the same location.
bool crxw_p(const Backlog& x, const Backlog& y, const Event& a, const Event& b);

/// crxw'' -- two-phase variant. Global writes are shadow stores; global
/// reads are shadow loads with no older (smaller eid) pending shadow store
/// to the same location in their own backlog.
bool crxw_pp(const Backlog& x, const Backlog& y, const Event& a, const Event& b);

/// Newer event b uses a register the older event a defines.
bool data_dep(const Event& a, const Event& b);

/// Older event a is a conditional and newer event b is a write.
bool control_dep(const Event& a, const Event& b);

}  // namespace fnf

#endif
