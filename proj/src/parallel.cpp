#include "permfact/parallel.hpp"

namespace permfact {

namespace {
std::atomic<unsigned> g_threads{1};
}

unsigned thread_count() { return g_threads.load(); }

void set_thread_count(unsigned n) { g_threads.store(n == 0 ? 1 : n); }

}  // namespace permfact
