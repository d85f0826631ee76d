#include "gkm/fixtures.hpp"

#include "gkm/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace gkm {
namespace fixtures {

MomentGraph point() {
    return MomentGraph(1, {"a0"}, {"pt"}, {}, Covector{{1}});
}

MomentGraph projective_space(int n, Covector lambda) {
    if (n < 0) throw ArgumentError("projective space dimension must be nonnegative");
    int rank = n + 1;
    std::vector<std::string> vars;
    std::vector<std::string> ids;
    for (int i = 0; i <= n; ++i) {
        vars.push_back("a" + std::to_string(i));
        ids.push_back("p" + std::to_string(i));
    }
    std::vector<Edge> edges;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::vector<std::int64_t> chi(static_cast<std::size_t>(rank), 0);
            chi[static_cast<std::size_t>(i)] = -1;
            chi[static_cast<std::size_t>(j)] = 1;
            edges.push_back({i, j, LinearForm(std::move(chi))});
        }
    return MomentGraph(rank, std::move(vars), std::move(ids), std::move(edges),
                       std::move(lambda));
}

MomentGraph projective_space(int n) {
    Covector lambda;
    for (int i = 0; i <= n; ++i) lambda.entries.push_back(n - i);
    return projective_space(n, std::move(lambda));
}

MomentGraph flag_s3(Covector lambda) {
    std::vector<std::string> ids = {"123", "132", "213", "231", "312", "321"};
    std::vector<Edge> edges;
    for (std::size_t w = 0; w < ids.size(); ++w)
        for (int a = 1; a <= 3; ++a)
            for (int b = a + 1; b <= 3; ++b) {
                std::string other = ids[w];
                for (char& ch : other) {
                    if (ch == '0' + a)
                        ch = static_cast<char>('0' + b);
                    else if (ch == '0' + b)
                        ch = static_cast<char>('0' + a);
                }
                std::size_t t = static_cast<std::size_t>(
                    std::find(ids.begin(), ids.end(), other) - ids.begin());
                if (t < w) continue; // each pair once
                // The longer permutation of the pair has b before a.
                bool w_longer = ids[w].find(static_cast<char>('0' + b)) <
                                ids[w].find(static_cast<char>('0' + a));
                std::vector<std::int64_t> chi(3, 0);
                chi[static_cast<std::size_t>(a - 1)] = 1;
                chi[static_cast<std::size_t>(b - 1)] = -1;
                int longer = static_cast<int>(w_longer ? w : t);
                int shorter = static_cast<int>(w_longer ? t : w);
                edges.push_back({longer, shorter, LinearForm(std::move(chi))});
            }
    return MomentGraph(3, {"e1", "e2", "e3"}, std::move(ids), std::move(edges),
                       std::move(lambda));
}

MomentGraph flag_s3() {
    return flag_s3(Covector{{2, 1, 0}});
}

MomentGraph weighted_p2(bool consistent_scale) {
    std::vector<Edge> edges;
    edges.push_back({1, 0, LinearForm({-1, 1})});
    edges.push_back({2, 1, LinearForm({2, 0})});
    edges.push_back({2, 0, LinearForm({0, 2})});
    std::map<std::string, Rational> scales;
    if (consistent_scale) scales.emplace("q2", Rational(1, 2));
    return MomentGraph(2, {"b0", "b1"}, {"q0", "q1", "q2"}, std::move(edges), Covector{{1, 2}},
                       std::move(scales));
}

MomentGraph product_graph(const MomentGraph& a, const MomentGraph& b) {
    std::vector<std::string> vars;
    {
        std::set<std::string> overlap;
        for (const std::string& n : a.vars())
            if (std::find(b.vars().begin(), b.vars().end(), n) != b.vars().end())
                overlap.insert(n);
        for (const std::string& n : a.vars()) vars.push_back(overlap.empty() ? n : n + "_1");
        for (const std::string& n : b.vars()) vars.push_back(overlap.empty() ? n : n + "_2");
    }
    int rank = a.rank() + b.rank();

    std::vector<std::string> ids;
    for (int va = 0; va < a.vertex_count(); ++va)
        for (int vb = 0; vb < b.vertex_count(); ++vb)
            ids.push_back(a.vertex_id(va) + "x" + b.vertex_id(vb));
    auto pair_index = [&](int va, int vb) { return va * b.vertex_count() + vb; };

    std::vector<Edge> edges;
    for (const Edge& ea : a.edges())
        for (int vb = 0; vb < b.vertex_count(); ++vb) {
            std::vector<std::int64_t> chi = ea.chi.coeffs();
            chi.resize(static_cast<std::size_t>(rank), 0);
            edges.push_back({pair_index(ea.u, vb), pair_index(ea.v, vb), LinearForm(std::move(chi))});
        }
    for (int va = 0; va < a.vertex_count(); ++va)
        for (const Edge& eb : b.edges()) {
            std::vector<std::int64_t> chi(static_cast<std::size_t>(a.rank()), 0);
            chi.insert(chi.end(), eb.chi.coeffs().begin(), eb.chi.coeffs().end());
            edges.push_back({pair_index(va, eb.u), pair_index(va, eb.v), LinearForm(std::move(chi))});
        }

    Covector lambda;
    lambda.entries = a.covector().entries;
    lambda.entries.insert(lambda.entries.end(), b.covector().entries.begin(),
                          b.covector().entries.end());

    std::map<std::string, Rational> scales;
    for (int va = 0; va < a.vertex_count(); ++va)
        for (int vb = 0; vb < b.vertex_count(); ++vb) {
            Rational s = a.scale(va) * b.scale(vb);
            if (!s.is_one())
                scales.emplace(ids[static_cast<std::size_t>(pair_index(va, vb))], s);
        }

    return MomentGraph(rank, std::move(vars), std::move(ids), std::move(edges), std::move(lambda),
                       std::move(scales));
}

} // namespace fixtures
} // namespace gkm
