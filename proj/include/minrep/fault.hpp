#pragma once

namespace minrep {

/// Deliberate defects for mutation testing of the verification suite.
enum class Fault { kNone, kFlipStructureConstant };

void set_fault(Fault f);
Fault active_fault();

class ScopedFault {
public:
  explicit ScopedFault(Fault f) : previous_(active_fault()) { set_fault(f); }
  ~ScopedFault() { set_fault(previous_); }
  ScopedFault(const ScopedFault&) = delete;
  ScopedFault& operator=(const ScopedFault&) = delete;

private:
  Fault previous_;
};

} // namespace minrep
