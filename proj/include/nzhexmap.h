/* nzhexmap — hexagonal tile maps of New Zealand DHBs and Regions as
 * deterministic SVG.
 *
 * C API of the shared library. All objects are opaque handles created and
 * destroyed by the functions below; every fallible call returns an
 * nzhm_status, with a human-readable detail available from
 * nzhm_last_error() on the calling thread after a failure. Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with nzhm_string_free().
 */

#ifndef NZHEXMAP_H
#define NZHEXMAP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nzhm_status {
    NZHM_OK = 0,
    NZHM_ERR_INVALID_ARGUMENT = 1, /* bad parameter or precondition */
    NZHM_ERR_UNKNOWN_UNIT = 2,     /* name resolves to no unit */
    NZHM_ERR_AMBIGUOUS_NAME = 3,   /* name resolves to several units */
    NZHM_ERR_DATA = 4,             /* invalid data (counts, fills, ...) */
    NZHM_ERR_NOMEM = 5
} nzhm_status;

/* Static description of a status code. */
const char* nzhm_status_message(nzhm_status status);

/* Detail message of the most recent failure on this thread. Empty string
 * if nothing failed yet. The pointer stays valid until the next failing
 * call on the same thread. */
const char* nzhm_last_error(void);

void nzhm_string_free(char* text);

/* ---- layouts ------------------------------------------------------- */

typedef struct nzhm_layout nzhm_layout;

/* kind is "dhb" (20 units) or "region" (16 units). */
nzhm_status nzhm_layout_builtin(const char* kind, nzhm_layout** out);
void nzhm_layout_free(nzhm_layout* layout);

size_t nzhm_layout_unit_count(const nzhm_layout* layout);

/* Registry row `index`. Output pointers are owned by the layout and stay
 * valid for its lifetime; any of them may be NULL if not wanted.
 * island is "North" or "South". */
nzhm_status nzhm_layout_unit_info(const nzhm_layout* layout, size_t index,
                                  const char** id, const char** name,
                                  const char** abbrev, const char** island,
                                  int* q, int* r);

/* Resolves a canonical name or abbreviation, case- and macron-
 * insensitively. *id_out is owned by the layout. Unknown names fail with
 * NZHM_ERR_UNKNOWN_UNIT (suggestions in nzhm_last_error()), ambiguous
 * abbreviations with NZHM_ERR_AMBIGUOUS_NAME. */
nzhm_status nzhm_layout_resolve(const nzhm_layout* layout, const char* text,
                                const char** id_out);

/* Tab-separated registry dump, one unit per line:
 * id, name, abbrev, island, q, r. */
nzhm_status nzhm_layout_dump(const nzhm_layout* layout, char** text_out);

/* Validation report, one finding per line prefixed "error: " or
 * "warning: "; empty string when clean. Returns the number of
 * error-severity findings through errors_out (may be NULL). */
nzhm_status nzhm_layout_validate(const nzhm_layout* layout, char** report_out,
                                 size_t* errors_out);

/* ---- apportionment -------------------------------------------------- */

/* Webster/Sainte-Laguë highest averages. seats_out must hold n entries;
 * the result sums to `seats`. Ties break toward the larger raw count,
 * then the smaller index. */
nzhm_status nzhm_sainte_lague(const double* counts, size_t n, unsigned seats,
                              unsigned* seats_out);

/* Six-triangle allocation for one hex: slots_out[k] receives the category
 * index painting triangle k (triangle 0 at the top edge, clockwise). */
nzhm_status nzhm_tri_slots(const double* counts, size_t n, size_t slots_out[6]);

/* ---- styling --------------------------------------------------------- */

/* fractions_out[i] = sqrt(values[i] / max(values)); needs n entries. */
nzhm_status nzhm_radius_sqrt(const double* values, size_t n, double* fractions_out);

/* Half-open bins over strictly increasing cuts; open_low/open_high enable
 * the unbounded first/last bins. */
nzhm_status nzhm_bin_value(double x, const double* cuts, size_t ncuts,
                           int open_low, int open_high, size_t* bin_out);

/* "#000000" or "#ffffff", whichever contrasts better with fill
 * ("#RRGGBB"). The result points at static storage. */
nzhm_status nzhm_label_colour(const char* fill, const char** colour_out);

/* Built-in sequential light-to-dark ramp. Returns a static array of
 * "#rrggbb" strings and stores its length through n_out. */
const char* const* nzhm_default_palette(size_t* n_out);

/* ---- stylesheets ----------------------------------------------------- */

typedef struct nzhm_style nzhm_style;

/* New stylesheet for `layout`; every unit starts MISSING (outline-only). */
nzhm_status nzhm_style_new(const nzhm_layout* layout, nzhm_style** out);
void nzhm_style_free(nzhm_style* style);

/* Styles one unit: fill "#RRGGBB", radius fraction in [0,1], and an
 * optional label override (NULL uses the layout name/abbreviation per the
 * render label mode). The label colour is derived from the fill. */
nzhm_status nzhm_style_set(nzhm_style* style, const char* unit_id, const char* fill,
                           double radius_fraction, const char* label_text);

/* Marks one unit MISSING again. */
nzhm_status nzhm_style_set_missing(nzhm_style* style, const char* unit_id);

/* ---- triangle fills --------------------------------------------------- */

typedef struct nzhm_tri_fills nzhm_tri_fills;

nzhm_status nzhm_tri_fills_new(const nzhm_layout* layout, nzhm_tri_fills** out);
void nzhm_tri_fills_free(nzhm_tri_fills* fills);

/* Exactly six colours, one per triangle slot. */
nzhm_status nzhm_tri_fills_set(nzhm_tri_fills* fills, const char* unit_id,
                               const char* const colours[6]);

/* ---- scenes and SVG --------------------------------------------------- */

typedef struct nzhm_scene nzhm_scene;
typedef struct nzhm_facets nzhm_facets;

/* label_mode is "full", "abbrev" or "none". cell_radius > 0 sets the map
 * scale in SVG user units. */
nzhm_status nzhm_render_map(const nzhm_layout* layout, const nzhm_style* style,
                            const char* label_mode, double cell_radius,
                            nzhm_scene** out);

nzhm_status nzhm_render_tri_map(const nzhm_layout* layout, const nzhm_tri_fills* fills,
                                const char* label_mode, double cell_radius,
                                nzhm_scene** out);

/* Horizontal swatch legend; labels/colours are parallel arrays. */
nzhm_status nzhm_render_legend(const char* const labels[], const char* const colours[],
                               size_t n, nzhm_scene** out);

/* Map with the legend centered underneath. */
nzhm_status nzhm_scene_attach_legend(const nzhm_scene* map, const nzhm_scene* legend,
                                     nzhm_scene** out);

nzhm_status nzhm_facets_new(nzhm_facets** out);
void nzhm_facets_free(nzhm_facets* facets);

/* Appends a titled panel (copied). All panels must share canvas size. */
nzhm_status nzhm_facets_add(nzhm_facets* facets, const char* title,
                            const nzhm_scene* panel);

/* Lays panels out in `columns` columns, in the order they were added,
 * with an optional shared legend (NULL for none) below the grid. */
nzhm_status nzhm_facets_render(const nzhm_facets* facets, unsigned columns,
                               const nzhm_scene* legend, nzhm_scene** out);

void nzhm_scene_free(nzhm_scene* scene);

/* Deterministic standalone SVG 1.1 document: identical scenes serialize
 * to identical bytes. *svg_out is NUL-terminated; len_out (optional)
 * receives the length without the terminator. */
nzhm_status nzhm_scene_to_svg(const nzhm_scene* scene, char** svg_out, size_t* len_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NZHEXMAP_H */
