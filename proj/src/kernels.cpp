// Copyright (c) 2026 The arcv-sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "arcv/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "arcv/errors.hpp"

namespace arcv::kernels {

const Ops& scalar_ops();
const Ops& avx2_ops();
bool avx2_supported();

namespace {

Isa pick_initial_isa() {
  if (const char* env = std::getenv("ARCV_KERNEL_ISA")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Isa::avx2;
  }
  return avx2_supported() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{pick_initial_isa()};
  return slot;
}

}  // namespace

const char* to_string(Isa isa) {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool cpu_supports(Isa isa) {
  return isa == Isa::scalar || avx2_supported();
}

const Ops& ops(Isa isa) {
  if (!cpu_supports(isa)) {
    throw ConfigError("kernel variant not supported on this host");
  }
  return isa == Isa::avx2 ? avx2_ops() : scalar_ops();
}

const Ops& ops() { return ops(active_isa()); }

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!cpu_supports(isa)) {
    throw ConfigError("kernel variant not supported on this host");
  }
  active_slot().store(isa, std::memory_order_relaxed);
}

}  // namespace arcv::kernels
