#include "indcx/shape.hpp"

#include "indcx/errors.hpp"

namespace indcx {

WedgeShape WedgeShape::wedge(int copies, int dim) {
    if (copies < 1) throw InputError("wedge needs at least one sphere");
    if (dim < -1) throw InputError("sphere dimension must be >= -1");
    if (dim == -1 && copies != 1) throw InputError("only a single copy of the empty sphere is meaningful");
    WedgeShape s;
    s.copies_ = copies;
    s.dim_ = dim;
    return s;
}

ChiValue WedgeShape::chi() const {
    if (is_point()) return 0;
    return (dim_ % 2 == 0) ? copies_ : -copies_;
}

std::string WedgeShape::to_string() const {
    if (is_point()) return "point";
    return "wedge(" + std::to_string(copies_) + "," + std::to_string(dim_) + ")";
}

WedgeShape shape_suspend(const WedgeShape& s, int k) {
    if (k < 0) throw InputError("suspension count must be >= 0");
    if (s.is_point()) return s;
    return WedgeShape::wedge(s.copies(), s.dim() + k);
}

}  // namespace indcx
