#pragma once

namespace grit {

/// Kernels that have an OpenMP path also keep the plain loop; the serial
/// variant is the reference the parallel one is tested against.
enum class Exec { serial, parallel };

/// Parallel when more than one OpenMP thread is available.
Exec default_exec();
void set_threads(int n);
int max_threads();

}  // namespace grit
