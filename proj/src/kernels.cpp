#include "mexcl/kernels.hpp"

namespace mexcl {

namespace {
std::atomic<Exec> current{Exec::Parallel};
}

Exec default_exec() { return current.load(); }
void set_default_exec(Exec e) { current.store(e); }

}  // namespace mexcl
