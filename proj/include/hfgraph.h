/* C API for the half-factoriality / geodetic-digraph toolkit.
 *
 * All handles are opaque and must be released with the matching _free
 * call. Functions return hfg_status; report strings are written to a
 * caller-supplied char** and must be released with hfg_free_string.
 * On HFG_EINVAL / HFG_ELIMIT / HFG_EINTERNAL, hfg_last_error() returns
 * a thread-local description of the failure.
 */
#ifndef HFGRAPH_H
#define HFGRAPH_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hfg_status {
    HFG_OK = 0,        /* computed; property holds where applicable */
    HFG_FAIL = 1,      /* computed; the queried property fails (certificate in report) */
    HFG_EINVAL = 2,    /* malformed input */
    HFG_ELIMIT = 3,    /* instance exceeds a configured cap */
    HFG_EINTERNAL = 4  /* internal invariant violated */
} hfg_status;

typedef struct hfg_group hfg_group;
typedef struct hfg_digraph hfg_digraph;

/* --- groups ------------------------------------------------------- */

/* "2,2,3" for Z_2 x Z_2 x Z_3; "" or "1" for the trivial group. */
hfg_status hfg_group_new(const char* spec, hfg_group** out);

/* Cayley-table text: order, identity index, row-major product table. */
hfg_status hfg_group_new_table(const char* text, hfg_group** out);

void hfg_group_free(hfg_group* g);
int hfg_group_order(const hfg_group* g);
long long hfg_group_exponent(const hfg_group* g);

/* --- digraphs ------------------------------------------------------ */

/* "V <n>" header, then "u v psi_num/psi_den [color]" per arc. */
hfg_status hfg_digraph_new(const char* text, hfg_digraph** out);
void hfg_digraph_free(hfg_digraph* d);

/* Path enumeration refuses digraphs above this many vertices. */
hfg_status hfg_digraph_set_guard(hfg_digraph* d, int max_vertices);

hfg_status hfg_digraph_geodetic(const hfg_digraph* d, int json, char** report);
hfg_status hfg_digraph_spectrum(const hfg_digraph* d, int json, char** report);
hfg_status hfg_digraph_unique_path(const hfg_digraph* d, int* up);

/* Induced digraph D_g for a seeded random rational potential, plus the
 * geodeticality of the result. */
hfg_status hfg_digraph_bond(const hfg_digraph* d, unsigned seed, int json, char** report);

/* mu-star / t-star over arc-color subsets; voltage_text may be NULL. */
hfg_status hfg_star_constants(const char* digraph_text, const char* voltage_text,
                              int json, char** report);

/* --- subsets of groups --------------------------------------------- */

/* Subset spec: semicolon-separated coordinate tuples, e.g. "1,0;0,1".
 * max_len <= 0 means the |G| default cap. */
hfg_status hfg_atoms(const hfg_group* g, const char* subset, int max_len,
                     int json, char** report);

/* weak = 0: half factorial; weak = 1: weakly half factorial.
 * HFG_OK when the property holds, HFG_FAIL with a certificate atom
 * in the report when it does not. */
hfg_status hfg_half_factorial(const hfg_group* g, const char* subset, int weak,
                              int json, char** report);

/* Cay(G;S) in the digraph file format, colors = generator indices. */
hfg_status hfg_cayley_export(const hfg_group* g, const char* subset, int json, char** report);

/* naive = 1 forces the all-pairs oracle instead of the single-source check. */
hfg_status hfg_cayley_geodetic(const hfg_group* g, const char* subset, int naive,
                               int json, char** report);

/* KVL of (Cay(G;S), phi, C_N) with phi((g,gs)) = exp(2 pi i / ord(s)). */
hfg_status hfg_cayley_kvl(const hfg_group* g, const char* subset, int json, char** report);

/* KVL of a voltage digraph file ("V", "N" headers, residue column). */
hfg_status hfg_kvl_file(const char* voltage_text, int json, char** report);

/* mu, t, mu0, t0 with witnesses; refuses |G| > order_cap (<= 0: default 12). */
hfg_status hfg_constants(const hfg_group* g, int order_cap, int json, char** report);

/* Edge-coloring bound report for a symmetric digraph (a graph);
 * max_edges <= 0 means the default cap of 12. */
hfg_status hfg_bounds(const char* digraph_text, int max_edges, int json, char** report);

/* Full theorem sweep over all abelian groups of order <= max_order.
 * HFG_OK on zero mismatches, HFG_FAIL otherwise. */
hfg_status hfg_verify_theorems(int max_order, int json, char** report);

/* --- misc ----------------------------------------------------------- */

const char* hfg_last_error(void);
void hfg_free_string(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HFGRAPH_H */
