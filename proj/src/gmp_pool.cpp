// Thread-local free-list pool for GMP limb allocations. Exact arithmetic on
// small values churns through huge numbers of 8..64-byte limb blocks; glibc
// malloc dominates the profile without this. GMP passes block sizes to its
// deallocation hooks, so the pool needs no per-block headers, and the
// free lists are thread-local, so the hooks stay data-race-free.

#include <gmp.h>

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace {

constexpr size_t kGranularity = 16;
constexpr size_t kBuckets = 4;  // 16, 32, 48, 64 bytes
constexpr size_t kMaxPooled = kBuckets * kGranularity;

thread_local void* t_free[kBuckets] = {};

inline size_t bucket_for(size_t bytes) { return (bytes - 1) / kGranularity; }

void* raw_alloc(size_t bytes) {
    if (bytes == 0) bytes = 1;
    if (bytes <= kMaxPooled) {
        const size_t b = bucket_for(bytes);
        if (void* p = t_free[b]) {
            t_free[b] = *static_cast<void**>(p);
            return p;
        }
        return std::malloc((b + 1) * kGranularity);
    }
    return std::malloc(bytes);
}

void raw_free(void* p, size_t bytes) {
    if (!p) return;
    if (bytes == 0) bytes = 1;
    if (bytes <= kMaxPooled) {
        const size_t b = bucket_for(bytes);
        *static_cast<void**>(p) = t_free[b];
        t_free[b] = p;
        return;
    }
    std::free(p);
}

void* pool_alloc(size_t n) { return raw_alloc(n); }

void* pool_realloc(void* p, size_t old_n, size_t new_n) {
    const bool old_pooled = old_n <= kMaxPooled;
    const bool new_pooled = new_n != 0 && new_n <= kMaxPooled;
    if (old_pooled && new_pooled && bucket_for(std::max<size_t>(old_n, 1)) ==
                                        bucket_for(std::max<size_t>(new_n, 1)))
        return p;
    if (!old_pooled && !new_pooled) return std::realloc(p, new_n);
    void* q = raw_alloc(new_n);
    std::memcpy(q, p, std::min(old_n, new_n));
    raw_free(p, old_n);
    return q;
}

void pool_free(void* p, size_t n) { raw_free(p, n); }

// Must be installed before the first GMP value exists anywhere, including
// namespace-scope statics in client code; priority 101 runs ahead of
// ordinary static initializers.
__attribute__((constructor(101))) void install_pool() {
    mp_set_memory_functions(pool_alloc, pool_realloc, pool_free);
}

}  // namespace

namespace crat::detail {
// Referenced from numeric.cpp so archive links always pull this object in.
int gmp_pool_anchor = 0;
}  // namespace crat::detail
