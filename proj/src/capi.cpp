#include "acsigma.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "experiments/experiments.hpp"
#include "io/chainfile.hpp"
#include "io/scene.hpp"
#include "io/svg.hpp"
#include "polyalg/genus.hpp"
#include "variation/variation.hpp"

#define ACS_API __attribute__((visibility("default")))

using namespace acs;

struct acs_scene {
  Scene s;
};

struct acs_chain {
  Chain c;
};

namespace {

thread_local std::string g_last_error;

acs_status map_err(Err code) {
  switch (code) {
    case Err::Parse: return ACS_ERR_PARSE;
    case Err::UnknownId: return ACS_ERR_UNKNOWN_ID;
    case Err::ViolationFound: return ACS_ERR_VIOLATION;
    case Err::Io: return ACS_ERR_IO;
    case Err::Internal: return ACS_ERR_INTERNAL;
    default: return ACS_ERR_DOMAIN;
  }
}

template <typename F>
acs_status guard(F&& f) {
  try {
    f();
    return ACS_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_err(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ACS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ACS_ERR_INTERNAL;
  }
}

acs_status bad_arg(const char* what) {
  g_last_error = what;
  return ACS_ERR_BADARG;
}

char* to_cstr(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

acs_status give_string(const std::string& s, char** out) {
  *out = to_cstr(s);
  if (!*out) {
    g_last_error = "out of memory";
    return ACS_ERR_INTERNAL;
  }
  return ACS_OK;
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (const T& x : v) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::string enc_text(const Enclosure& e) {
  return e.exact() ? rat_to_string(e.lo) : rat_to_decimal(e.lo, 12);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(Err::Io, "cannot write file: " + path.string());
  out << content;
  if (!out) fail(Err::Io, "failed writing file: " + path.string());
}

std::filesystem::path prepare_dir(const char* dir) {
  std::filesystem::path p(dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec) fail(Err::Io, "cannot create directory: " + p.string() + " (" + ec.message() + ")");
  return p;
}

std::string frame_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "frame_%04zu.svg", i);
  return buf;
}

void write_polygon_frames(const char* dir, const std::vector<Polygon>& snaps) {
  auto p = prepare_dir(dir);
  SvgWindow w = window_of(snaps.front());
  for (const Polygon& s : snaps) w = window_union(w, window_of(s));
  Rat pad = rat_max(w.maxx - w.minx, w.maxy - w.miny) / 20 + rat(1, 10);
  w = window_pad(w, pad);
  for (std::size_t i = 0; i < snaps.size(); ++i)
    write_file(p / frame_name(i), svg_polygon_frame(snaps[i], w));
}

void write_region_frames(const char* dir, const std::vector<GenusRegion>& snaps) {
  auto p = prepare_dir(dir);
  SvgWindow w = window_of(snaps.front());
  for (const GenusRegion& s : snaps) w = window_union(w, window_of(s));
  Rat pad = rat_max(w.maxx - w.minx, w.maxy - w.miny) / 20 + rat(1, 10);
  w = window_pad(w, pad);
  for (std::size_t i = 0; i < snaps.size(); ++i)
    write_file(p / frame_name(i), svg_region_frame(snaps[i], w));
}

}  // namespace

extern "C" {

ACS_API const char* acs_version(void) { return "acsigma 1.0.0"; }

ACS_API const char* acs_last_error(void) { return g_last_error.c_str(); }

ACS_API void acs_string_free(char* s) { std::free(s); }

ACS_API acs_status acs_scene_parse(const char* text, acs_scene** out) {
  if (!text || !out) return bad_arg("acs_scene_parse: NULL argument");
  return guard([&] { *out = new acs_scene{parse_scene(text)}; });
}

ACS_API acs_status acs_scene_load(const char* path, acs_scene** out) {
  if (!path || !out) return bad_arg("acs_scene_load: NULL argument");
  return guard([&] { *out = new acs_scene{load_scene(path)}; });
}

ACS_API acs_status acs_scene_serialize(const acs_scene* s, char** out_text) {
  if (!s || !out_text) return bad_arg("acs_scene_serialize: NULL argument");
  acs_status rc = ACS_OK;
  acs_status g = guard([&] { rc = give_string(serialize_scene(s->s), out_text); });
  return g != ACS_OK ? g : rc;
}

ACS_API acs_status acs_scene_save(const acs_scene* s, const char* path) {
  if (!s || !path) return bad_arg("acs_scene_save: NULL argument");
  return guard([&] { save_scene(s->s, path); });
}

ACS_API void acs_scene_free(acs_scene* s) { delete s; }

ACS_API acs_status acs_chain_parse(const char* text, acs_chain** out) {
  if (!text || !out) return bad_arg("acs_chain_parse: NULL argument");
  return guard([&] { *out = new acs_chain{parse_chain(text)}; });
}

ACS_API acs_status acs_chain_load(const char* path, acs_chain** out) {
  if (!path || !out) return bad_arg("acs_chain_load: NULL argument");
  return guard([&] { *out = new acs_chain{load_chain(path)}; });
}

ACS_API acs_status acs_chain_serialize(const acs_chain* c, char** out_text) {
  if (!c || !out_text) return bad_arg("acs_chain_serialize: NULL argument");
  acs_status rc = ACS_OK;
  acs_status g = guard([&] { rc = give_string(serialize_chain(c->c), out_text); });
  return g != ACS_OK ? g : rc;
}

ACS_API acs_status acs_chain_save(const acs_chain* c, const char* path) {
  if (!c || !path) return bad_arg("acs_chain_save: NULL argument");
  return guard([&] { save_chain(c->c, path); });
}

ACS_API acs_status acs_chain_invert(const acs_chain* c, acs_chain** out) {
  if (!c || !out) return bad_arg("acs_chain_invert: NULL argument");
  return guard([&] { *out = new acs_chain{inverse(c->c)}; });
}

ACS_API size_t acs_chain_length(const acs_chain* c) { return c ? c->c.steps.size() : 0; }

ACS_API void acs_chain_free(acs_chain* c) { delete c; }

ACS_API acs_status acs_cmd_vf_line(const acs_scene* s, const char* list_id, const char* a,
                                   const char* b, const char* c, char** out_text) {
  if (!s || !list_id || !a || !b || !c || !out_text)
    return bad_arg("acs_cmd_vf_line: NULL argument");
  acs_status rc = ACS_OK;
  acs_status g = guard([&] {
    std::vector<Pt> pts = scene_list_points(s->s, list_id);
    Line l = line_from_coeffs(rat_from_string(a), rat_from_string(b), rat_from_string(c));
    std::vector<std::size_t> idx = crossing_segments(pts, l);
    std::string text = "vf=" + std::to_string(idx.size()) + "; crossing=[" + join(idx) + "]";
    rc = give_string(text, out_text);
  });
  return g != ACS_OK ? g : rc;
}

ACS_API acs_status acs_cmd_vf_max(const acs_scene* s, const char* list_id, char** out_text) {
  if (!s || !list_id || !out_text) return bad_arg("acs_cmd_vf_max: NULL argument");
  acs_status rc = ACS_OK;
  acs_status g = guard([&] {
    std::vector<Pt> pts = scene_list_points(s->s, list_id);
    VfResult r = vf_max(pts);
    std::string line = "[]";
    if (r.witness)
      line = "[" + r.witness->a.get_str() + "," + r.witness->b.get_str() + "," +
             r.witness->c.get_str() + "]";
    std::vector<int> labels;
    labels.reserve(r.labels.size());
    for (SideLabel l : r.labels) labels.push_back(static_cast<int>(l));
    std::string text = "vf_max=" + std::to_string(r.value) + "; line=" + line + "; labels=[" +
                       join(labels) + "]";
    rc = give_string(text, out_text);
  });
  return g != ACS_OK ? g : rc;
}

ACS_API acs_status acs_cmd_var(const acs_scene* s, const char* fn_id, int max_len,
                               char** out_text) {
  if (!s || !fn_id || !out_text) return bad_arg("acs_cmd_var: NULL argument");
  if (max_len < 0) return bad_arg("acs_cmd_var: negative max_len");
  acs_status rc = ACS_OK;
  acs_status g = guard([&] {
    const SampledFunction& f = scene_function(s->s, fn_id);
    VarOptions opt;
    if (max_len > 0) opt.max_len = static_cast<std::size_t>(max_len);
    NormReport nr = bv_norm_estimate(f, opt);
    std::string text = "var_lb=" + enc_text(nr.var) + "; norm_lb=" + enc_text(nr.norm) +
                       "; vf=" + std::to_string(nr.search.vf) + "; list=[" +
                       join(nr.search.list) + "]; exhaustive=" +
                       (nr.search.exhaustive ? "yes" : "no");
    rc = give_string(text, out_text);
  });
  return g != ACS_OK ? g : rc;
}

ACS_API acs_status acs_cmd_reduce(const acs_scene* s, const char* polygon_id, const char* svg_dir,
                                  acs_chain** out_chain, char** out_text) {
  if (!s || !polygon_id) return bad_arg("acs_cmd_reduce: NULL argument");
  acs_status rc = ACS_OK;
  acs_status g = guard([&] {
    const Polygon& p = scene_polygon(s->s, polygon_id);
    Certificate cert = reduce_polygon_to_triangle(p);
    if (svg_dir) write_polygon_frames(svg_dir, cert.snapshots);
    if (out_text) rc = give_string("steps=" + std::to_string(cert.snapshots.size() - 1), out_text);
    if (rc == ACS_OK && out_chain) *out_chain = new acs_chain{std::move(cert.chain)};
  });
  return g != ACS_OK ? g : rc;
}

ACS_API acs_status acs_cmd_normalize(const acs_scene* s, const char* region_id,
                                     const char* svg_dir, acs_chain** out_chain,
                                     char** out_text) {
  if (!s || !region_id) return bad_arg("acs_cmd_normalize: NULL argument");
  acs_status rc = ACS_OK;
  acs_status g = guard([&] {
    const GenusRegion& r = scene_region(s->s, region_id);
    RegionCertificate cert = normalize_genus_region(r);
    if (svg_dir) write_region_frames(svg_dir, cert.snapshots);
    std::string text = "steps=" + std::to_string(cert.chain.steps.size()) +
                       "; genus=" + std::to_string(r.genus());
    if (out_text) rc = give_string(text, out_text);
    if (rc == ACS_OK && out_chain) *out_chain = new acs_chain{std::move(cert.chain)};
  });
  return g != ACS_OK ? g : rc;
}

ACS_API acs_status acs_cmd_apply(const acs_chain* c, const acs_scene* s, int inverse_flag,
                                 acs_scene** out_scene) {
  if (!c || !s || !out_scene) return bad_arg("acs_cmd_apply: NULL argument");
  return guard([&] {
    Chain use = inverse_flag ? inverse(c->c) : c->c;
    *out_scene = new acs_scene{map_scene(use, s->s)};
  });
}

ACS_API acs_status acs_cmd_experiment(const char* name, long n, long trials,
                                      unsigned long long seed, const char* svg_dir,
                                      char** out_text) {
  if (!name || !out_text) return bad_arg("acs_cmd_experiment: NULL argument");
  const std::string which = name;
  if (which != "disk-square" && which != "fuzz-hpa" && which != "fuzz-lpa" && which != "cn" &&
      which != "norm-examples")
    return bad_arg(("unknown experiment \"" + which +
                    "\"; expected disk-square, fuzz-hpa, fuzz-lpa, cn, or norm-examples")
                       .c_str());
  acs_status rc = ACS_OK;
  acs_status g = guard([&] {
    std::string text;
    if (which == "disk-square") {
      int cap = n > 0 ? static_cast<int>(n) : 20;
      DiskSquareTable t = disk_square_growth(cap);
      text = report_text(t);
      if (svg_dir) {
        auto dir = prepare_dir(svg_dir);
        std::vector<std::pair<double, double>> samples;
        for (const DiskSquareRow& r : t.rows) samples.emplace_back(double(r.n), r.ratio);
        write_file(dir / "disk_square_growth.svg",
                   svg_plot_xy(samples, t.ac_reference, "growth ratio vs n"));
      }
    } else if (which == "fuzz-hpa") {
      text = report_text(fuzz_hpa(trials > 0 ? static_cast<std::size_t>(trials) : 10000, seed));
    } else if (which == "fuzz-lpa") {
      text = report_text(fuzz_lpa(trials > 0 ? static_cast<std::size_t>(trials) : 10000, seed));
    } else if (which == "cn") {
      text = report_text(cn_experiment(n > 0 ? static_cast<std::size_t>(n) : 3,
                                       trials > 0 ? static_cast<std::size_t>(trials) : 200, seed));
    } else {
      text = report_text(norm_examples());
    }
    rc = give_string(text, out_text);
  });
  return g != ACS_OK ? g : rc;
}

}  // extern "C"
