#include "fnf/render.hpp"

namespace fnf {

Labeler::Labeler(const std::vector<Program>& expanded) {
  int base = 0;
  for (const Program& p : expanded) {
    base_.push_back(base);
    base += max_path_actions(p);
  }
}

std::string Labeler::label(const Event& e) const {
  int idx = base_.at(static_cast<std::size_t>(e.pid)) + e.eid;
  std::string s;
  if (idx < 26)
    s = std::string(1, static_cast<char>('a' + idx));
  else
    s = "e" + std::to_string(idx);
  if (e.kind == Kind::Shadow) s += "'";
  return s;
}

std::string render_steps(const Labeler& lab, const std::vector<Step>& steps) {
  std::string out;
  for (const Step& s : steps) {
    out += "(";
    for (const Event& e : s) out += lab.label(e);
    out += ")";
  }
  return out;
}

std::string render_bracketed(const Architecture& arch, const Labeler& lab,
                             const Execution& es) {
  return render_steps(lab, decompose(arch, es));
}

std::string render_flat(const Labeler& lab, const Execution& es) {
  std::string out;
  for (const Event& e : es) out += lab.label(e);
  return out;
}

}  // namespace fnf
