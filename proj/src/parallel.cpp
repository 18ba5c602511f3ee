#include "grit/parallel.hpp"

#include <omp.h>

namespace grit {

Exec default_exec() { return omp_get_max_threads() > 1 ? Exec::parallel : Exec::serial; }

void set_threads(int n) {
    if (n >= 1) omp_set_num_threads(n);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace grit
