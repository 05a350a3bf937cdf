#ifndef HCSERIES_H
#define HCSERIES_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HcStatus {
  HC_STATUS_OK = 0,
  HC_STATUS_INTERNAL = 1,
  HC_STATUS_USAGE = 2,
  HC_STATUS_DATA = 3,
  HC_STATUS_RESOURCE = 4,
  HC_STATUS_NULL_ARGUMENT = 5,
  HC_STATUS_PANIC = 6,
} HcStatus;

/*
 A Coxeter group.
 */
typedef struct HcDatum HcDatum;

/*
 Support counts of simple modules in category O.
 */
typedef struct HcSupportTable HcSupportTable;

typedef struct HcCounts {
  uint64_t dim;
  uint64_t radical_dim;
  uint64_t simples;
} HcCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread, or null. Valid until
 the next failing call on the same thread.
 */
const char *hc_last_error(void);

/*
 # Safety
 `s` must be null or a string returned by this library.
 */
void hc_string_free(char *s);

/*
 Builds a Coxeter group from a type symbol such as "E6" or "B3xA1".

 # Safety
 `symbol` must be a nul-terminated string and `out` a valid pointer.
 */
enum HcStatus hc_datum_new(const char *symbol, struct HcDatum **out);

/*
 # Safety
 `d` must be null or a handle from [`hc_datum_new`], not yet freed.
 */
void hc_datum_free(struct HcDatum *d);

/*
 # Safety
 `d` must be a live handle.
 */
uint32_t hc_datum_rank(const struct HcDatum *d);

/*
 # Safety
 `d` must be a live handle.
 */
uint64_t hc_datum_order(const struct HcDatum *d);

/*
 Normalized quadratic parameter of z_top on L_c(λ) for a corank-one
 parabolic, as text such as "q^2" or "-1".

 # Safety
 Strings must be nul-terminated; `out` must be a valid pointer.
 */
enum HcStatus hc_qparam(const struct HcDatum *d,
                        const char *parabolic,
                        const char *c,
                        const char *lambda,
                        char **out);

/*
 Radical dimension and number of simple modules of H(W) at the KZ
 parameters of c. `dim_bound` 0 selects the default bound.

 # Safety
 `c` must be nul-terminated; `out` must be a valid pointer.
 */
enum HcStatus hc_count_simples(const struct HcDatum *d,
                               const char *c,
                               uint64_t dim_bound,
                               bool extended,
                               struct HcCounts *out);

/*
 Support table of O_c(W). A null `findim_path` uses the data directory.

 # Safety
 Strings must be null (where allowed) or nul-terminated; `out` must be a
 valid pointer.
 */
enum HcStatus hc_count_supports(const struct HcDatum *d,
                                const char *c,
                                const char *findim_path,
                                bool extended,
                                struct HcSupportTable **out);

/*
 # Safety
 `t` must be null or a live support table handle.
 */
void hc_support_table_free(struct HcSupportTable *t);

/*
 Count for a parabolic class label ("1" for full support); 0 if absent,
 -1 on a null argument.

 # Safety
 `t` must be a live handle and `class` nul-terminated.
 */
int64_t hc_support_table_count(const struct HcSupportTable *t, const char *class_);

/*
 The table as text (`csv` false) or CSV.

 # Safety
 `t` must be a live handle and `out` a valid pointer.
 */
enum HcStatus hc_support_table_render(const struct HcSupportTable *t, bool csv, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HCSERIES_H */
