#pragma once

#include "zx/diagram.hpp"
#include "zx/matrix.hpp"

namespace zx {

// Which of the two equivalent Z-spider constructions backs spider evaluation.
enum class SpiderBackend { Direct, Braket };

// Denotational semantics: a well-formed diagram with n inputs and m outputs
// evaluates to a 2^m x 2^n matrix. Stack is the Kronecker product with the
// top operand on the left (top wire = most significant qubit); Compose
// multiplies in reverse order.
CMatrix eval(const Diagram& d, SpiderBackend backend = SpiderBackend::Direct);

} // namespace zx
