#include "sbalg/presentation.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <utility>

namespace sbalg {

namespace {

std::string level_name(char letter, int k)
{
    return k < 0 ? std::string(1, letter) + "m1" : std::string(1, letter) + std::to_string(k);
}

std::string d_name(int i)
{
    return "d" + std::to_string(i);
}

// Left/right vertex of level k >= 3: the alpha arrow of the left vertex goes to
// the left vertex one level down, its beta arrow to the right one, and
// symmetrically. Which of a_k, b_k plays "left" alternates in pairs of levels.
std::pair<std::string, std::string> lr(int k)
{
    const bool a_left = k == 3 || k % 4 == 2 || k % 4 == 3;
    return a_left ? std::pair{level_name('a', k), level_name('b', k)}
                  : std::pair{level_name('b', k), level_name('a', k)};
}

struct Targets {
    std::string alpha, beta;  // empty when absent
};

// Where the alpha and beta arrows starting at each vertex of the level-m
// algebra end. Loops: alpha at u, v, w; beta at bm1, cm1.
std::map<std::string, Targets> arrow_table(int r, int m)
{
    std::map<std::string, Targets> t;
    for (const auto& x : {"u", "v", "w"})
        t[x] = {x, ""};
    t["bm1"] = {"", "bm1"};
    t["cm1"] = {"", "cm1"};
    for (int i = 0; i <= r; ++i) {
        Targets& d = t[d_name(i)];
        if (i < r)
            (i % 2 == 0 ? d.beta : d.alpha) = d_name(i + 1);
    }
    t["a0"] = {"c0", "u"};
    t["b0"] = {"bm1", "v"};
    t["c0"] = {"cm1", "w"};
    if (m >= 1) {
        t["a1"] = {"d0", "a0"};
        t["b1"] = {"b0", "c0"};
        t["c1"] = {"a0", "b0"};
    }
    if (m >= 2) {
        t["a2"] = {"c2", "a1"};
        t["b2"] = {"b1", "c1"};
        t["c2"] = {"c1", "b1"};
    }
    if (m >= 3) {
        t["a3"] = {"a2", "b2"};
        t["b3"] = {"b2", "c2"};
    }
    for (int k = 4; k <= m; ++k) {
        const auto [l, rr] = lr(k);
        const auto [l1, r1] = lr(k - 1);
        t[l] = {l1, r1};
        t[rr] = {r1, l1};
    }
    return t;
}

std::string arrow_name(LetterClass c, const std::string& src)
{
    return std::string(c == LetterClass::Alpha ? "alpha_" : "beta_") + src;
}

}  // namespace

std::vector<std::string> lambda_vertices(int r, int m)
{
    if (r < 1)
        throw std::invalid_argument("r must be at least 1");
    if (m < 0)
        throw std::invalid_argument("m must be non-negative");
    std::vector<std::string> out;
    for (const auto& [v, _] : arrow_table(r, m))
        out.push_back(v);
    return out;
}

Presentation lambda_presentation(int r, int m)
{
    if (r < 1)
        throw std::invalid_argument("r must be at least 1, got " + std::to_string(r));
    if (m < 0)
        throw std::invalid_argument("m must be non-negative, got " + std::to_string(m));
    const auto table = arrow_table(r, m);

    PresentationBuilder b("lambda_r" + std::to_string(r) + "_m" + std::to_string(m));
    for (const auto& [v, _] : table)
        b.vertex(v);
    for (const auto& [v, t] : table) {
        if (!t.alpha.empty())
            b.arrow(arrow_name(LetterClass::Alpha, v), LetterClass::Alpha, v, t.alpha);
        if (!t.beta.empty())
            b.arrow(arrow_name(LetterClass::Beta, v), LetterClass::Beta, v, t.beta);
    }

    // Mixed compositions vanish, and so does the square of every loop.
    for (const auto& [v, t] : table) {
        for (auto c : {LetterClass::Alpha, LetterClass::Beta}) {
            const auto& next = c == LetterClass::Alpha ? t.alpha : t.beta;
            if (next.empty())
                continue;
            const auto& nt = table.at(next);
            const auto& other = c == LetterClass::Alpha ? nt.beta : nt.alpha;
            const LetterClass oc = c == LetterClass::Alpha ? LetterClass::Beta : LetterClass::Alpha;
            if (!other.empty())
                b.zero({arrow_name(c, v), arrow_name(oc, next)});
            if (next == v)
                b.zero({arrow_name(c, v), arrow_name(c, v)});
        }
    }

    // alpha^i = beta^j where the pure alpha and beta walks out of a vertex
    // first meet again. Loops end a walk.
    for (const auto& [v, t] : table) {
        if (t.alpha.empty() || t.beta.empty() || t.alpha == v || t.beta == v)
            continue;
        auto walk = [&](bool alpha) {
            std::vector<std::string> seq{v};
            while (true) {
                const auto& nt = table.at(seq.back());
                const auto& next = alpha ? nt.alpha : nt.beta;
                if (next.empty() || next == seq.back())
                    break;
                seq.push_back(next);
            }
            return seq;
        };
        const auto aw = walk(true);
        const auto bw = walk(false);
        for (std::size_t i = 1; i < aw.size(); ++i) {
            const auto j = std::find(bw.begin() + 1, bw.end(), aw[i]);
            if (j == bw.end())
                continue;
            PathWord pa, pb;
            for (std::size_t k = 0; k < i; ++k)
                pa.push_back(arrow_name(LetterClass::Alpha, aw[k]));
            for (auto it = bw.begin(); it + 1 <= j; ++it)
                pb.push_back(arrow_name(LetterClass::Beta, *it));
            b.equal(std::move(pa), std::move(pb));
            break;
        }
    }
    return b.build();
}

Presentation lambda1prime_presentation(int r)
{
    auto keep = lambda_vertices(r, 2);
    std::erase_if(keep, [](const std::string& v) { return v == "a2" || v == "b2"; });
    return full_subpresentation(lambda_presentation(r, 2), keep, "lambda1prime_r" + std::to_string(r));
}

std::vector<std::string> subquiver_u()
{
    return {"d0", "a1", "a0", "c1", "c2", "b1"};
}

namespace {

std::mutex cache_mutex;
std::map<std::pair<int, int>, AlgebraPtr> cache;

}  // namespace

AlgebraPtr lambda_algebra(int r, int m)
{
    auto pres = lambda_presentation(r, m);
    std::lock_guard lock(cache_mutex);
    auto& slot = cache[{r, m}];
    if (!slot)
        slot = make_algebra(std::move(pres));
    return slot;
}

AlgebraPtr lambda1prime_algebra(int r)
{
    // Keyed with m = -1 so it shares the cache with the main family.
    auto pres = lambda1prime_presentation(r);
    std::lock_guard lock(cache_mutex);
    auto& slot = cache[{r, -1}];
    if (!slot)
        slot = make_algebra(std::move(pres));
    return slot;
}

}  // namespace sbalg
