#include "zx/semantics.hpp"

namespace zx {

namespace {

CMatrix swap_matrix() {
    CMatrix m(4, 4);
    m.at(0, 0) = 1.0;
    m.at(1, 2) = 1.0;
    m.at(2, 1) = 1.0;
    m.at(3, 3) = 1.0;
    return m;
}

CMatrix spider_matrix(std::size_t n, std::size_t m, Angle a, SpiderBackend backend) {
    return backend == SpiderBackend::Direct ? z_matrix_direct(n, m, a)
                                            : z_matrix_braket(n, m, a);
}

CMatrix eval_impl(const Diagram& d, SpiderBackend backend) {
    switch (d.kind()) {
    case DiagramKind::Empty:
        return CMatrix::identity(1);
    case DiagramKind::Wire:
        return CMatrix::identity(2);
    case DiagramKind::Box:
        return hadamard();
    case DiagramKind::Cap: {
        CMatrix m(1, 4);
        m.at(0, 0) = 1.0;
        m.at(0, 3) = 1.0;
        return m;
    }
    case DiagramKind::Cup: {
        CMatrix m(4, 1);
        m.at(0, 0) = 1.0;
        m.at(3, 0) = 1.0;
        return m;
    }
    case DiagramKind::Swap:
        return swap_matrix();
    case DiagramKind::ZSpider:
        return spider_matrix(d.field_in(), d.field_out(), d.phase(), backend);
    case DiagramKind::XSpider:
        return matmul(matmul(hadamard_power(d.field_out()),
                             spider_matrix(d.field_in(), d.field_out(), d.phase(), backend)),
                      hadamard_power(d.field_in()));
    case DiagramKind::Stack:
        return kron(eval_impl(d.first(), backend), eval_impl(d.second(), backend));
    case DiagramKind::Compose:
        return matmul(eval_impl(d.second(), backend), eval_impl(d.first(), backend));
    case DiagramKind::Cast:
        return eval_impl(d.first(), backend);
    }
    throw DimError("unreachable diagram kind");
}

} // namespace

CMatrix eval(const Diagram& d, SpiderBackend backend) {
    dims(d); // reject ill-formed terms with a precise error before evaluating
    return eval_impl(d, backend);
}

} // namespace zx
