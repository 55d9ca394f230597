#include "nzhexmap.h"

#include <cstring>
#include <new>
#include <span>
#include <string>

#include "apportion.hpp"
#include "layouts.hpp"
#include "render.hpp"
#include "styling.hpp"

using namespace nzhexmap;

struct nzhm_layout {
    const Layout* layout;  // points at the immutable builtin registry
};

struct nzhm_style {
    const Layout* layout;
    StyleSheet sheet;
};

struct nzhm_tri_fills {
    const Layout* layout;
    std::map<std::string, std::array<Rgb, 6>> fills;
};

struct nzhm_scene {
    Scene scene;
};

struct nzhm_facets {
    std::vector<std::pair<std::string, Scene>> panels;
};

namespace {

thread_local std::string t_last_error;

nzhm_status fail(nzhm_status status, const char* message)
{
    t_last_error = message;
    return status;
}

// Runs fn, translating exceptions into status codes and the thread-local
// error detail.
template <typename Fn>
nzhm_status guarded(Fn&& fn)
{
    try {
        fn();
        return NZHM_OK;
    } catch (const UnknownUnitError& e) {
        return fail(NZHM_ERR_UNKNOWN_UNIT, e.what());
    } catch (const AmbiguousNameError& e) {
        return fail(NZHM_ERR_AMBIGUOUS_NAME, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(NZHM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(NZHM_ERR_NOMEM, "out of memory");
    } catch (const std::exception& e) {
        return fail(NZHM_ERR_DATA, e.what());
    }
}

nzhm_status null_arg(const char* what)
{
    return fail(NZHM_ERR_INVALID_ARGUMENT, what);
}

char* copy_string(const std::string& text)
{
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

const Unit& find_unit(const Layout& layout, const char* unit_id)
{
    for (const Unit& u : layout.units)
        if (u.id == unit_id)
            return u;
    throw UnknownUnitError("no unit with id '" + std::string(unit_id) + "'");
}

}  // namespace

extern "C" {

const char* nzhm_status_message(nzhm_status status)
{
    switch (status) {
    case NZHM_OK:
        return "ok";
    case NZHM_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case NZHM_ERR_UNKNOWN_UNIT:
        return "unknown unit";
    case NZHM_ERR_AMBIGUOUS_NAME:
        return "ambiguous name";
    case NZHM_ERR_DATA:
        return "invalid data";
    case NZHM_ERR_NOMEM:
        return "out of memory";
    }
    return "unknown status";
}

const char* nzhm_last_error(void)
{
    return t_last_error.c_str();
}

void nzhm_string_free(char* text)
{
    delete[] text;
}

/* ---- layouts ------------------------------------------------------- */

nzhm_status nzhm_layout_builtin(const char* kind, nzhm_layout** out)
{
    if (!kind || !out)
        return null_arg("kind and out must not be NULL");
    return guarded([&] {
        const Layout& layout = builtin_layout(parse_layout_kind(kind));
        *out = new nzhm_layout{&layout};
    });
}

void nzhm_layout_free(nzhm_layout* layout)
{
    delete layout;
}

size_t nzhm_layout_unit_count(const nzhm_layout* layout)
{
    return layout ? layout->layout->units.size() : 0;
}

nzhm_status nzhm_layout_unit_info(const nzhm_layout* layout, size_t index,
                                  const char** id, const char** name,
                                  const char** abbrev, const char** island,
                                  int* q, int* r)
{
    if (!layout)
        return null_arg("layout must not be NULL");
    if (index >= layout->layout->units.size())
        return fail(NZHM_ERR_INVALID_ARGUMENT, "unit index out of range");
    const Unit& u = layout->layout->units[index];
    if (id)
        *id = u.id.c_str();
    if (name)
        *name = u.name.c_str();
    if (abbrev)
        *abbrev = u.abbrev.c_str();
    if (island)
        *island = island_name(u.island).data();
    if (q)
        *q = u.cell.q;
    if (r)
        *r = u.cell.r;
    return NZHM_OK;
}

nzhm_status nzhm_layout_resolve(const nzhm_layout* layout, const char* text,
                                const char** id_out)
{
    if (!layout || !text || !id_out)
        return null_arg("layout, text and id_out must not be NULL");
    return guarded([&] {
        const Unit& u = resolve_name(text, *layout->layout);
        *id_out = u.id.c_str();
    });
}

nzhm_status nzhm_layout_dump(const nzhm_layout* layout, char** text_out)
{
    if (!layout || !text_out)
        return null_arg("layout and text_out must not be NULL");
    return guarded([&] { *text_out = copy_string(dump_layout(*layout->layout)); });
}

nzhm_status nzhm_layout_validate(const nzhm_layout* layout, char** report_out,
                                 size_t* errors_out)
{
    if (!layout || !report_out)
        return null_arg("layout and report_out must not be NULL");
    return guarded([&] {
        std::string report;
        size_t errors = 0;
        for (const Finding& f : validate_layout(*layout->layout)) {
            if (f.severity == Severity::Error) {
                report += "error: ";
                ++errors;
            } else {
                report += "warning: ";
            }
            report += f.message;
            report += '\n';
        }
        *report_out = copy_string(report);
        if (errors_out)
            *errors_out = errors;
    });
}

/* ---- apportionment -------------------------------------------------- */

nzhm_status nzhm_sainte_lague(const double* counts, size_t n, unsigned seats,
                              unsigned* seats_out)
{
    if (!counts || !seats_out)
        return null_arg("counts and seats_out must not be NULL");
    return guarded([&] {
        const Allocation a = sainte_lague(std::span<const double>(counts, n), seats);
        std::memcpy(seats_out, a.seats.data(), n * sizeof(unsigned));
    });
}

nzhm_status nzhm_tri_slots(const double* counts, size_t n, size_t slots_out[6])
{
    if (!counts || !slots_out)
        return null_arg("counts and slots_out must not be NULL");
    return guarded([&] {
        const auto slots = tri_slots(std::span<const double>(counts, n));
        std::memcpy(slots_out, slots.data(), sizeof slots);
    });
}

/* ---- styling --------------------------------------------------------- */

nzhm_status nzhm_radius_sqrt(const double* values, size_t n, double* fractions_out)
{
    if (!values || !fractions_out)
        return null_arg("values and fractions_out must not be NULL");
    return guarded([&] {
        const auto fractions = radius_sqrt(std::span<const double>(values, n));
        std::memcpy(fractions_out, fractions.data(), n * sizeof(double));
    });
}

nzhm_status nzhm_bin_value(double x, const double* cuts, size_t ncuts,
                           int open_low, int open_high, size_t* bin_out)
{
    if (!cuts || !bin_out)
        return null_arg("cuts and bin_out must not be NULL");
    return guarded([&] {
        Breaks breaks{{cuts, cuts + ncuts}, open_low != 0, open_high != 0};
        *bin_out = bin_value(x, breaks);
    });
}

nzhm_status nzhm_label_colour(const char* fill, const char** colour_out)
{
    if (!fill || !colour_out)
        return null_arg("fill and colour_out must not be NULL");
    return guarded([&] {
        const Rgb c = label_colour(parse_colour(fill));
        *colour_out = c.r == 0 ? "#000000" : "#ffffff";
    });
}

const char* const* nzhm_default_palette(size_t* n_out)
{
    static std::vector<std::string> storage = [] {
        std::vector<std::string> out;
        for (const Rgb& c : default_palette().colours)
            out.push_back(colour_hex(c));
        return out;
    }();
    static std::vector<const char*> pointers = [] {
        std::vector<const char*> out;
        for (const std::string& s : storage)
            out.push_back(s.c_str());
        return out;
    }();
    if (n_out)
        *n_out = pointers.size();
    return pointers.data();
}

/* ---- stylesheets ----------------------------------------------------- */

nzhm_status nzhm_style_new(const nzhm_layout* layout, nzhm_style** out)
{
    if (!layout || !out)
        return null_arg("layout and out must not be NULL");
    return guarded([&] { *out = new nzhm_style{layout->layout, {}}; });
}

void nzhm_style_free(nzhm_style* style)
{
    delete style;
}

nzhm_status nzhm_style_set(nzhm_style* style, const char* unit_id, const char* fill,
                           double radius_fraction, const char* label_text)
{
    if (!style || !unit_id || !fill)
        return null_arg("style, unit_id and fill must not be NULL");
    return guarded([&] {
        const Unit& u = find_unit(*style->layout, unit_id);
        if (radius_fraction < 0.0 || radius_fraction > 1.0)
            throw std::invalid_argument("radius fraction for '" + u.id + "' outside [0, 1]");
        UnitStyle us;
        us.fill = parse_colour(fill);
        us.radius_fraction = radius_fraction;
        if (label_text)
            us.label = label_text;
        us.label_fill = label_colour(*us.fill);
        style->sheet.entries[u.id] = std::move(us);
    });
}

nzhm_status nzhm_style_set_missing(nzhm_style* style, const char* unit_id)
{
    if (!style || !unit_id)
        return null_arg("style and unit_id must not be NULL");
    return guarded([&] {
        const Unit& u = find_unit(*style->layout, unit_id);
        style->sheet.entries.erase(u.id);
    });
}

/* ---- triangle fills --------------------------------------------------- */

nzhm_status nzhm_tri_fills_new(const nzhm_layout* layout, nzhm_tri_fills** out)
{
    if (!layout || !out)
        return null_arg("layout and out must not be NULL");
    return guarded([&] { *out = new nzhm_tri_fills{layout->layout, {}}; });
}

void nzhm_tri_fills_free(nzhm_tri_fills* fills)
{
    delete fills;
}

nzhm_status nzhm_tri_fills_set(nzhm_tri_fills* fills, const char* unit_id,
                               const char* const colours[6])
{
    if (!fills || !unit_id || !colours)
        return null_arg("fills, unit_id and colours must not be NULL");
    return guarded([&] {
        const Unit& u = find_unit(*fills->layout, unit_id);
        std::array<Rgb, 6> parsed;
        for (int k = 0; k < 6; ++k) {
            if (!colours[k])
                throw std::invalid_argument("unit '" + u.id + "': six fill colours required");
            parsed[k] = parse_colour(colours[k]);
        }
        fills->fills[u.id] = parsed;
    });
}

/* ---- scenes and SVG --------------------------------------------------- */

nzhm_status nzhm_render_map(const nzhm_layout* layout, const nzhm_style* style,
                            const char* label_mode, double cell_radius,
                            nzhm_scene** out)
{
    if (!layout || !style || !label_mode || !out)
        return null_arg("layout, style, label_mode and out must not be NULL");
    return guarded([&] {
        *out = new nzhm_scene{render_map(*layout->layout, style->sheet,
                                         parse_label_mode(label_mode), cell_radius)};
    });
}

nzhm_status nzhm_render_tri_map(const nzhm_layout* layout, const nzhm_tri_fills* fills,
                                const char* label_mode, double cell_radius,
                                nzhm_scene** out)
{
    if (!layout || !fills || !label_mode || !out)
        return null_arg("layout, fills, label_mode and out must not be NULL");
    return guarded([&] {
        *out = new nzhm_scene{render_tri_map(*layout->layout, fills->fills,
                                             parse_label_mode(label_mode), cell_radius)};
    });
}

nzhm_status nzhm_render_legend(const char* const labels[], const char* const colours[],
                               size_t n, nzhm_scene** out)
{
    if (!labels || !colours || !out)
        return null_arg("labels, colours and out must not be NULL");
    return guarded([&] {
        std::vector<std::pair<std::string, Rgb>> entries;
        entries.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            if (!labels[i] || !colours[i])
                throw std::invalid_argument("legend labels and colours must not be NULL");
            entries.emplace_back(labels[i], parse_colour(colours[i]));
        }
        *out = new nzhm_scene{render_legend(entries)};
    });
}

nzhm_status nzhm_scene_attach_legend(const nzhm_scene* map, const nzhm_scene* legend,
                                     nzhm_scene** out)
{
    if (!map || !legend || !out)
        return null_arg("map, legend and out must not be NULL");
    return guarded([&] { *out = new nzhm_scene{attach_legend(map->scene, legend->scene)}; });
}

nzhm_status nzhm_facets_new(nzhm_facets** out)
{
    if (!out)
        return null_arg("out must not be NULL");
    return guarded([&] { *out = new nzhm_facets{}; });
}

void nzhm_facets_free(nzhm_facets* facets)
{
    delete facets;
}

nzhm_status nzhm_facets_add(nzhm_facets* facets, const char* title,
                            const nzhm_scene* panel)
{
    if (!facets || !title || !panel)
        return null_arg("facets, title and panel must not be NULL");
    return guarded([&] { facets->panels.emplace_back(title, panel->scene); });
}

nzhm_status nzhm_facets_render(const nzhm_facets* facets, unsigned columns,
                               const nzhm_scene* legend, nzhm_scene** out)
{
    if (!facets || !out)
        return null_arg("facets and out must not be NULL");
    return guarded([&] {
        FacetSpec spec;
        for (const auto& [title, panel] : facets->panels)
            spec.panel_order.push_back(title);
        spec.columns = columns;
        spec.shared_legend = legend != nullptr;
        *out = new nzhm_scene{
            render_facets(facets->panels, spec, legend ? &legend->scene : nullptr)};
    });
}

void nzhm_scene_free(nzhm_scene* scene)
{
    delete scene;
}

nzhm_status nzhm_scene_to_svg(const nzhm_scene* scene, char** svg_out, size_t* len_out)
{
    if (!scene || !svg_out)
        return null_arg("scene and svg_out must not be NULL");
    return guarded([&] {
        const std::string svg = to_svg(scene->scene);
        *svg_out = copy_string(svg);
        if (len_out)
            *len_out = svg.size();
    });
}

} /* extern "C" */
