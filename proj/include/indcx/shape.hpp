#pragma once

#include <string>

#include "indcx/euler.hpp"

namespace indcx {

// Symbolic homotopy type: a wedge of `copies` spheres of dimension `dim`, or
// a point. wedge(1,-1) is the empty complex {∅}.
class WedgeShape {
public:
    static WedgeShape point() { return WedgeShape{}; }
    // Throws InputError unless copies >= 1, dim >= -1 and (dim > -1 or copies == 1).
    static WedgeShape wedge(int copies, int dim);

    bool is_point() const { return copies_ == 0; }
    int copies() const { return copies_; }
    int dim() const { return dim_; }

    // m(-1)^d, 0 for a point.
    ChiValue chi() const;
    std::string to_string() const;

    bool operator==(const WedgeShape&) const = default;

private:
    int copies_ = 0;
    int dim_ = 0;
};

// Σ^k: wedge(m,d) -> wedge(m,d+k); a point stays a point.
WedgeShape shape_suspend(const WedgeShape& s, int k);

}  // namespace indcx
