#include "tqft/tv.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "tqft/error.hpp"

namespace tqft {

cplx tetrahedral_symbol(const FSymbolSet& fs, int x01, int x02, int x03, int x12, int x13, int x23)
{
    if (!fs.admissible(x01, x12, x23, x03, x02, x13)) return 0.0;
    return fs.F(x01, x12, x23, x03, x02, x13) / std::sqrt(fs.d(x02) * fs.d(x13));
}

namespace {

struct FaceCheck {
    // Local labels x_ab, x_bc, x_ac of a face a<b<c, as (tet, local edge) slots.
    int tet;
    int k_ab, k_bc, k_ac;
};

class Enumerator {
public:
    Enumerator(const FSymbolSet& fs, const Triangulation& tri, long long cap, std::atomic<long long>& nodes)
        : fs_(fs), tri_(tri), cap_(cap), nodes_(nodes), rank_(fs.rank())
    {
        const int ne = tri.n_edges();
        order_.resize(ne);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return tri.edge_degree(a) > tri.edge_degree(b); });
        pos_.assign(ne, 0);
        for (int p = 0; p < ne; ++p) pos_[order_[p]] = p;
        faces_at_.assign(ne, {});
        tets_at_.assign(ne, {});
        for (int f = 0; f < tri.n_faces(); ++f) {
            auto [t, opp] = tri.face_representative(f);
            int v[3], n = 0;
            for (int i = 0; i < 4; ++i)
                if (i != opp) v[n++] = i;
            FaceCheck fc{t, local_edge_index(v[0], v[1]), local_edge_index(v[1], v[2]), local_edge_index(v[0], v[2])};
            int last = std::max({pos_[tri.edge(t, fc.k_ab)], pos_[tri.edge(t, fc.k_bc)], pos_[tri.edge(t, fc.k_ac)]});
            faces_at_[last].push_back(fc);
        }
        for (int t = 0; t < tri.n_tet(); ++t) {
            int last = 0;
            for (int k = 0; k < 6; ++k) last = std::max(last, pos_[tri.edge(t, k)]);
            tets_at_[last].push_back(t);
        }
        color_.assign(ne, 0);
    }

    int n_edges() const { return static_cast<int>(order_.size()); }

    // Sum over all colorings whose first enumerated edge has the given color.
    cplx shard(int first_color, long long& colorings)
    {
        colorings_ = 0;
        cplx total = descend(0, first_color, cplx(1.0, 0.0));
        colorings = colorings_;
        return total;
    }

private:
    int label(int t, int k) const
    {
        int c = color_[tri_.edge(t, k)];
        return tri_.edge_reversed(t, k) ? fs_.ring().dual(c) : c;
    }

    cplx descend(int p, int only_color, cplx weight)
    {
        if (p == n_edges()) {
            ++colorings_;
            return weight;
        }
        const int e = order_[p];
        cplx acc = 0.0;
        int lo = only_color >= 0 ? only_color : 0;
        int hi = only_color >= 0 ? only_color + 1 : rank_;
        for (int c = lo; c < hi; ++c) {
            if (nodes_.fetch_add(1, std::memory_order_relaxed) >= cap_)
                throw CapExceeded("state-sum enumeration exceeded the node cap");
            color_[e] = c;
            bool ok = true;
            for (const FaceCheck& fc : faces_at_[p]) {
                if (!fs_.ring().N(label(fc.tet, fc.k_ab), label(fc.tet, fc.k_bc), label(fc.tet, fc.k_ac))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            cplx w = weight * fs_.d(c);
            for (int t : tets_at_[p]) {
                cplx g = tetrahedral_symbol(fs_, label(t, 0), label(t, 1), label(t, 2), label(t, 3), label(t, 4),
                                            label(t, 5));
                w *= tri_.orientation(t) > 0 ? g : std::conj(g);
            }
            acc += descend(p + 1, -1, w);
        }
        return acc;
    }

    const FSymbolSet& fs_;
    const Triangulation& tri_;
    long long cap_;
    std::atomic<long long>& nodes_;
    int rank_;
    std::vector<int> order_, pos_;
    std::vector<std::vector<FaceCheck>> faces_at_;
    std::vector<std::vector<int>> tets_at_;
    std::vector<int> color_;
    long long colorings_ = 0;
};

} // namespace

TVResult tv_state_sum(const FSymbolSet& fs, const Triangulation& tri, const TVOptions& opt)
{
    const int rank = fs.rank();
    std::atomic<long long> nodes{0};
    std::vector<cplx> partial(rank, cplx(0.0, 0.0));
    std::vector<long long> counts(rank, 0);
    int workers = opt.threads > 0 ? opt.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min(workers, rank);
    if (workers <= 1) {
        Enumerator en(fs, tri, opt.node_cap, nodes);
        for (int c = 0; c < rank; ++c) partial[c] = en.shard(c, counts[c]);
    } else {
        std::atomic<int> next{0};
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    Enumerator en(fs, tri, opt.node_cap, nodes);
                    for (int c = next++; c < rank; c = next++) partial[c] = en.shard(c, counts[c]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    TVResult res;
    cplx total = 0.0;
    for (int c = 0; c < rank; ++c) {
        total += partial[c];
        res.colorings += counts[c];
    }
    res.value = total * std::pow(fs.mu(), -static_cast<double>(tri.n_vertices()));
    res.nodes = nodes.load();
    res.shards = rank;
    return res;
}

cplx tv_invariant(const FSymbolSet& fs, const Triangulation& tri, const TVOptions& opt)
{
    return tv_state_sum(fs, tri, opt).value;
}

} // namespace tqft
