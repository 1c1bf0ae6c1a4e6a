#ifndef WEBCLASS_WEBCLASS_H
#define WEBCLASS_WEBCLASS_H

#include <stddef.h>
#include <stdint.h>

#if defined(WEBCLASS_BUILDING)
#define WC_API __attribute__((visibility("default")))
#else
#define WC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wc_status {
  WC_OK = 0,
  WC_ERR_PARSE = 1,
  WC_ERR_PRECONDITION = 2,
  WC_ERR_UNKNOWN_VARIABLE = 3,
  WC_ERR_DIVISION_BY_ZERO = 4,
  WC_ERR_NO_FOCI = 5,
  WC_ERR_FRAME_UNDEFINED = 6,
  WC_ERR_FOCI_UNDEFINED = 7,
  WC_ERR_UNREPRESENTABLE = 8,
  WC_ERR_INCOMPATIBLE = 9,
  WC_ERR_POLE = 10,
  WC_ERR_INTERNAL = 11,
  WC_ERR_INVALID_ARGUMENT = 12
} wc_status;

/* Opaque handles. */
typedef struct wc_kt wc_kt;
typedef struct wc_potential wc_potential;

WC_API const char* wc_version(void);
/* Message of the last failing call on this thread; empty when none. */
WC_API const char* wc_last_error(void);
/* Frees strings returned through char** out parameters. */
WC_API void wc_free_string(char* s);

/* Killing tensors. Rationals are strings such as "3", "-2/5" or "0.25". */
WC_API int wc_kt_parse(const char* csv, wc_kt** out);
/* web: cartesian | polar | parabolic | eh. a, b: polar center; c2: EH. NULL means 0. */
WC_API int wc_kt_canonical(const char* web, const char* a, const char* b, const char* c2, wc_kt** out);
/* Pullback by (rotation c, s with c^2 + s^2 = 1, translation p1, p2). */
WC_API int wc_kt_act(const wc_kt* kt, const char* c, const char* s, const char* p1, const char* p2, wc_kt** out);
WC_API int wc_kt_params(const wc_kt* kt, char** json);
WC_API void wc_kt_free(wc_kt* kt);

/* Reports are JSON objects with sorted keys. */
WC_API int wc_classify(const wc_kt* kt, char** json);
WC_API int wc_invariants(const wc_kt* kt, char** json);
WC_API int wc_joint(const wc_kt* first, const wc_kt* second, char** json);
WC_API int wc_sw_check(const wc_kt* first, const wc_kt* second, char** json);
WC_API int wc_weakened_case(const wc_kt* first, const wc_kt* second, char** json);

/* "sw:omega2=1,alpha=1,beta=1" (missing couplings stay symbolic) or "laurent:c*x^i*y^j,...". */
WC_API int wc_potential_parse(const char* text, wc_potential** out);
WC_API void wc_potential_free(wc_potential* v);
WC_API int wc_compat(const wc_kt* kt, const wc_potential* v, char** json);
WC_API int wc_integrate_u(const wc_kt* kt, const wc_potential* v, char** json);
/* Couplings (w2, alpha, beta) of the SW potential compatible with all n tensors. */
WC_API int wc_sw_family(const wc_kt* const* kts, size_t n, char** json);

/* k == NULL selects generic k. */
WC_API int wc_ttw_case(const char* k, char** json);
WC_API int wc_ttw_scan(char** json);

/*
 * Collision values for a preset argument set, or for args_csv ("2+2k,2-2k,...") when non-NULL.
 * manifest NULL uses the bundled presets. include_constant < 0 takes the preset flag.
 * oracle_max_den > 0 also runs the rank oracle on the grid |k| <= 3 with that denominator bound.
 */
WC_API int wc_collide(const char* set_name, const char* args_csv, const char* manifest, int include_constant,
                      int oracle_max_den, uint64_t seed, char** json);

/*
 * RK4 flow of H = (px^2 + py^2)/2 + V from p0 = {x, y, px, py}. Drifts are reported for H and
 * for the first integrals of the n tensors (each integrated against V). csv_path may be NULL.
 * On WC_ERR_POLE the partial trajectory is still written to csv_path.
 */
WC_API int wc_simulate(const wc_potential* v, const double p0[4], double dt, double T, const wc_kt* const* kts,
                       size_t n, const char* csv_path, char** json);

/* Writes an SVG. rotation/translation strings may be NULL for the canonical position. */
WC_API int wc_plot_web(const char* web, const char* a, const char* b, const char* c2, const char* c, const char* s,
                       const char* p1, const char* p2, const char* svg_path, char** json);

#ifdef __cplusplus
}
#endif

#endif
