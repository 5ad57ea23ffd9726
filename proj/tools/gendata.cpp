// Regenerates the bundled permutation and code files under a data directory.
#include <algorithm>
#include <iostream>
#include <map>
#include <numeric>
#include <set>

#include "ntlab/catalog.hpp"
#include "ntlab/io.hpp"
#include "ntlab/modules.hpp"

using namespace ntlab;

namespace {

Permutation from_map(std::size_t m, const std::function<std::size_t(std::size_t)>& f) {
    std::vector<std::size_t> img(m);
    for (std::size_t i = 0; i < m; ++i) img[i] = f(i);
    return Permutation(img);
}

std::size_t powmod(std::size_t b, std::size_t e, std::size_t p) {
    std::size_t r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
        if (e & 1u) r = r * b % p;
    return r;
}

// PSL2(23) on GF(23) + {inf = 23}, plus x -> x^3/9 on squares and 9x^3 on non-squares
// (or the reverse when `swapped`).
PermGroup mathieu24(bool swapped) {
    const std::size_t p = 23, inf = 23, m = 24;
    auto square = [&](std::size_t x) { return powmod(x, (p - 1) / 2, p) == 1; };
    const std::size_t inv9 = powmod(9, p - 2, p);
    auto delta = from_map(m, [&](std::size_t x) -> std::size_t {
        if (x == inf || x == 0) return x;
        const std::size_t c = powmod(x, 3, p);
        return square(x) != swapped ? c * inv9 % p : 9 * c % p;
    });
    auto gens = psl2(p).generators();
    gens.push_back(delta);
    return PermGroup(m, gens);
}

PermGroup restrict_stabilizer(const PermGroup& g, const std::vector<std::size_t>& fixed,
                              const std::function<std::size_t(std::size_t)>& relabel, std::size_t degree) {
    std::vector<std::size_t> base(fixed);
    for (std::size_t x = 0; x < g.degree(); ++x)
        if (std::find(fixed.begin(), fixed.end(), x) == fixed.end()) base.push_back(x);
    const StabilizerChain chain(g.degree(), g.generators(), base);
    std::vector<Permutation> gens;
    for (const auto& h : chain.stabilizer_generators(fixed.size())) {
        std::vector<std::size_t> img(degree);
        for (std::size_t x = 0; x < g.degree(); ++x)
            if (std::find(fixed.begin(), fixed.end(), x) == fixed.end()) img[relabel(x)] = relabel(h(x));
        gens.emplace_back(img);
    }
    return PermGroup(degree, gens);
}

using Plane = std::set<std::set<std::size_t>>;

// A7 acting on one orbit of 15 Fano planes on {0..6}.
PermGroup alternating7_on_planes() {
    const std::vector<Permutation> a7 = {Permutation::from_cycles(7, {{0, 1, 2}}),
                                         Permutation::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}})};
    Plane fano;
    for (std::size_t i = 0; i < 7; ++i) fano.insert({i, (i + 1) % 7, (i + 3) % 7});
    auto image = [](const Plane& pl, const Permutation& s) {
        Plane out;
        for (const auto& line : pl) {
            std::set<std::size_t> l;
            for (auto x : line) l.insert(s(x));
            out.insert(l);
        }
        return out;
    };
    std::vector<Plane> planes{fano};
    std::map<Plane, std::size_t> index{{fano, 0}};
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (const auto& s : a7) {
            auto q = image(planes[i], s);
            if (index.emplace(q, planes.size()).second) planes.push_back(q);
        }
    std::vector<Permutation> gens;
    for (const auto& s : a7)
        gens.push_back(from_map(planes.size(), [&](std::size_t i) { return index.at(image(planes[i], s)); }));
    return PermGroup(planes.size(), gens);
}

int fail(const std::string& what) {
    std::cerr << "gendata: " << what << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    const std::filesystem::path dir = argc > 1 ? argv[1] : data_directory();
    std::filesystem::create_directories(dir / "groups");
    std::filesystem::create_directories(dir / "codes");

    bool swapped = false;
    auto m24 = mathieu24(swapped);
    if (!is_invariant(golay24(), m24).invariant) m24 = mathieu24(swapped = true);
    if (m24.order() != BigInt(244823040)) return fail("M24 generators give order " + m24.order().str());
    if (!is_invariant(golay24(), m24).invariant) return fail("M24 does not preserve golay24");
    const auto m23 = restrict_stabilizer(m24, {23}, [](std::size_t x) { return x; }, 23);
    const auto m22 = restrict_stabilizer(m24, {23, 0}, [](std::size_t x) { return x - 1; }, 22);
    if (m23.order() != BigInt(10200960) || m22.order() != BigInt(443520)) return fail("Mathieu stabilizer orders");
    if (!is_invariant(golay23(), m23).invariant || !is_invariant(m22_code(), m22).invariant)
        return fail("Mathieu stabilizers do not preserve their codes");
    write_group_file(dir / "groups" / "m24.perm", m24,
                     std::string("PSL2(23) on the projective line of GF(23) (infinity = 23) with x -> ") +
                         (swapped ? "9x^3 on squares, x^3/9 on non-squares" : "x^3/9 on squares, 9x^3 on non-squares"));
    write_group_file(dir / "groups" / "m23.perm", m23, "stabilizer of point 23 in m24.perm");
    write_group_file(dir / "groups" / "m22.perm", m22, "stabilizer of points 23 and 0 in m24.perm, point x relabelled x-1");

    const auto a7 = std::make_shared<const PermGroup>(alternating7_on_planes());
    if (a7->degree() != 15 || a7->order() != BigInt(2520)) return fail("A7 on Fano planes has the wrong degree or order");
    write_group_file(dir / "groups" / "alt7.perm", *a7,
                     "A7 = <(0 1 2), (0 1 2 3 4 5 6)> on the orbit of the Fano plane {i, i+1, i+3 mod 7}, in discovery order");
    SearchOptions opt;
    opt.exhaustive = false;
    const auto found = submodule_search(a7, opt);
    const Submodule* code = nullptr;
    for (const auto* s : found.minimal())
        if (s->minimal->verdict == Tristate::yes && s->dimension() == 4) code = s;
    if (!code) return fail("no certified 4-dimensional minimal submodule for A7");
    write_code_file(dir / "codes" / "alt7.code", Code(code->space()),
                    "certified minimal submodule of the permutation module of alt7.perm (randomized search, default seed)");
    std::cout << "wrote m22, m23, m24, alt7 to " << dir << "\n";
}
