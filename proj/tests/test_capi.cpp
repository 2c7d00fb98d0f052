// Exercises the shared library strictly through the public C header.
#include <hfgraph.h>

#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

static int failures = 0;

#define EXPECT(cond)                                                        \
    do {                                                                    \
        if (!(cond)) {                                                      \
            std::fprintf(stderr, "FAILED %s:%d: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                     \
        }                                                                   \
    } while (0)

static std::string take(char* s) {
    std::string out = s ? s : "";
    hfg_free_string(s);
    return out;
}

int main() {
    // group lifecycle and basic queries
    hfg_group* g = nullptr;
    EXPECT(hfg_group_new("2,3", &g) == HFG_OK);
    EXPECT(hfg_group_order(g) == 6);
    EXPECT(hfg_group_exponent(g) == 6);

    hfg_group* bad = nullptr;
    EXPECT(hfg_group_new("2,x", &bad) == HFG_EINVAL);
    EXPECT(bad == nullptr);
    EXPECT(std::strlen(hfg_last_error()) > 0);

    // half factoriality: HFG_OK when it holds, HFG_FAIL with certificate
    char* rep = nullptr;
    EXPECT(hfg_half_factorial(g, "1,0", 0, 0, &rep) == HFG_OK);
    take(rep);
    rep = nullptr;
    EXPECT(hfg_half_factorial(g, "0,1;0,2", 0, 1, &rep) == HFG_FAIL);
    EXPECT(take(rep).find("cross") != std::string::npos);

    // atoms
    rep = nullptr;
    EXPECT(hfg_atoms(g, "0,1;0,2", 0, 1, &rep) == HFG_OK);
    EXPECT(take(rep).find("atoms") != std::string::npos);
    rep = nullptr;
    EXPECT(hfg_atoms(g, "0,0", 0, 0, &rep) == HFG_EINVAL);  // identity in S

    // cayley geodetic mirrors hf; kvl mirrors whf
    rep = nullptr;
    EXPECT(hfg_cayley_geodetic(g, "1,0", 0, 0, &rep) == HFG_OK);
    take(rep);
    rep = nullptr;
    EXPECT(hfg_cayley_geodetic(g, "0,1;0,2", 1, 0, &rep) == HFG_FAIL);
    take(rep);
    rep = nullptr;
    EXPECT(hfg_cayley_kvl(g, "1,0", 0, &rep) == HFG_OK);
    take(rep);

    // exported cayley digraph feeds back through the digraph entry points
    rep = nullptr;
    EXPECT(hfg_cayley_export(g, "1,0;0,1", 0, &rep) == HFG_OK);
    std::string dtext = take(rep);
    hfg_digraph* d = nullptr;
    EXPECT(hfg_digraph_new(dtext.c_str(), &d) == HFG_OK);
    rep = nullptr;
    hfg_status geo = hfg_digraph_geodetic(d, 1, &rep);
    EXPECT(geo == HFG_OK || geo == HFG_FAIL);
    take(rep);
    rep = nullptr;
    EXPECT(hfg_digraph_spectrum(d, 1, &rep) == HFG_OK);
    take(rep);
    int up = -1;
    EXPECT(hfg_digraph_unique_path(d, &up) == HFG_OK);
    EXPECT(up == 0 || up == 1);
    rep = nullptr;
    EXPECT(hfg_digraph_bond(d, 42, 1, &rep) == HFG_OK);
    take(rep);

    // guard: shrink it below the vertex count, then restore
    EXPECT(hfg_digraph_set_guard(d, 2) == HFG_OK);
    rep = nullptr;
    EXPECT(hfg_digraph_geodetic(d, 0, &rep) == HFG_ELIMIT);
    EXPECT(hfg_digraph_set_guard(d, 16) == HFG_OK);
    rep = nullptr;
    EXPECT(hfg_digraph_geodetic(d, 0, &rep) != HFG_ELIMIT);
    take(rep);
    hfg_digraph_free(d);

    // malformed digraph text
    hfg_digraph* dbad = nullptr;
    EXPECT(hfg_digraph_new("not a digraph", &dbad) == HFG_EINVAL);
    EXPECT(dbad == nullptr);

    // star constants on a colored two-arc digraph
    const char* two_colors =
        "V 2\n"
        "0 1 1 0\n"
        "1 0 1 1\n";
    rep = nullptr;
    EXPECT(hfg_star_constants(two_colors, nullptr, 1, &rep) == HFG_OK);
    EXPECT(take(rep).find("mu_star") != std::string::npos);

    // kvl from a voltage file
    const char* volt =
        "V 2\n"
        "N 2\n"
        "0 1 2 1\n"
        "1 0 2 1\n";
    rep = nullptr;
    EXPECT(hfg_kvl_file(volt, 0, &rep) == HFG_OK);
    take(rep);

    // constants with the order cap
    rep = nullptr;
    EXPECT(hfg_constants(g, 0, 1, &rep) == HFG_OK);
    std::string creport = take(rep);
    EXPECT(creport.find("\"mu\"") != std::string::npos);
    hfg_group* z16 = nullptr;
    EXPECT(hfg_group_new("16", &z16) == HFG_OK);
    rep = nullptr;
    EXPECT(hfg_constants(z16, 12, 0, &rep) == HFG_ELIMIT);
    hfg_group_free(z16);

    // bounds on a triangle
    const char* tri =
        "V 3\n"
        "0 1 1\n1 0 1\n1 2 1\n2 1 1\n0 2 1\n2 0 1\n";
    rep = nullptr;
    EXPECT(hfg_bounds(tri, 0, 1, &rep) == HFG_OK);
    EXPECT(take(rep).find("chi_prime") != std::string::npos);

    // theorem sweep at a small order
    rep = nullptr;
    EXPECT(hfg_verify_theorems(5, 0, &rep) == HFG_OK);
    take(rep);

    hfg_group_free(g);

    if (failures == 0) std::printf("capi tests passed\n");
    return failures == 0 ? 0 : 1;
}
