#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tqft/center.hpp"
#include "tqft/fixtures.hpp"
#include "tqft/fsymbols.hpp"
#include "tqft/modular_data.hpp"
#include "tqft/nimrep.hpp"
#include "tqft/plumbing.hpp"
#include "tqft/state_spaces.hpp"
#include "tqft/triangulation.hpp"
#include "tqft/tube_algebra.hpp"

#ifndef TQFT_TEST_DATA
#define TQFT_TEST_DATA "tests/data"
#endif

namespace tt {

using namespace tqft;

inline const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

inline std::string text(const std::string& kind, const std::string& name)
{
    return read_file(fixture_path(kind, name));
}
inline std::string test_text(const std::string& file) { return read_file(std::string(TQFT_TEST_DATA) + "/" + file); }

inline FSymbolSet category(const std::string& name) { return parse_category(text("categories", name)); }
inline FusionRing ring(const std::string& name) { return parse_fusion_ring(text("categories", name)); }
inline ModularData modular(const std::string& name) { return parse_modular_data(text("modular", name)); }
inline Triangulation tri(const std::string& name) { return parse_triangulation(text("triangulations", name)); }
inline PlumbingTree plumbing(const std::string& name) { return parse_plumbing(text("plumbings", name)); }
inline DecoratedSurface surface(const std::string& name) { return parse_surface(text("surfaces", name)); }

// Categories with F-symbols, and every bundled ring.
inline const std::vector<std::string> kCategories{"trivial", "vec_z2", "vec_z3", "fib", "ising"};
inline const std::vector<std::string> kRings{"trivial", "vec_z2", "vec_z3", "fib", "ising", "rep_s3"};
inline const std::vector<std::string> kModular{"trivial", "toric_code", "fib", "semion", "ising"};
inline const std::vector<std::string> kTriangulations{"s3_1tet", "s3_2tet", "s3_5tet", "s2xs1", "rp3",
                                                      "l31",     "l41",     "l51",     "t3"};

struct Center {
    FSymbolSet fs;
    TubeAlgebra tube;
    CenterData cd;
};

inline Center center(const std::string& name)
{
    FSymbolSet fs = category(name);
    TubeAlgebra tube(fs);
    CenterData cd = decompose_center(tube, fs);
    return {fs, tube, cd};
}

inline Eigen::VectorXcd basis(int n, int i)
{
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
    v(i) = 1.0;
    return v;
}

} // namespace tt
