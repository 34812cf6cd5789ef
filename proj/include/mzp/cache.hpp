#ifndef MZP_CACHE_HPP
#define MZP_CACHE_HPP

#include <unistd.h>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "mzp/int_poly.hpp"

namespace mzp {

/* On-disk cache of computed polynomials in the canonical text format,
 * addressed by kind (G or P), the type (m, n), provenance, and the format
 * version. Entries written by other format versions are ignored rather
 * than migrated; `gc` deletes them.
 */
class PolyCache {
public:
    static constexpr const char* version_dir = "mzp.v1";

    explicit PolyCache(std::filesystem::path root) : root_(std::move(root)) {}

    const std::filesystem::path& root() const { return root_; }

    std::optional<IntPoly> load_G(unsigned m, unsigned n) const { return load(g_path(m, n)); }
    void store_G(unsigned m, unsigned n, const IntPoly& p) const { store(g_path(m, n), p); }

    std::optional<IntPoly> load_P(unsigned m, unsigned n, bool full, unsigned long lead = 0) const {
        return load(p_path(m, n, full, lead));
    }
    void store_P(unsigned m, unsigned n, bool full, unsigned long lead, const IntPoly& p) const {
        store(p_path(m, n, full, lead), p);
    }

    struct Entry {
        std::string rel_path;
        std::uintmax_t bytes;
        bool current_version;
    };

    std::vector<Entry> list() const {
        std::vector<Entry> out;
        if (!std::filesystem::exists(root_)) return out;
        for (const auto& e : std::filesystem::recursive_directory_iterator(root_)) {
            if (!e.is_regular_file()) continue;
            const auto rel = std::filesystem::relative(e.path(), root_);
            bool current = rel.begin() != rel.end() && rel.begin()->string() == version_dir;
            if (current) {
                // a current-version entry must also carry the right tag line
                std::ifstream in(e.path());
                std::string tag;
                std::getline(in, tag);
                if (!tag.empty() && tag.back() == '\r') tag.pop_back();
                current = tag == IntPoly::text_tag;
            }
            out.push_back({rel.generic_string(), e.file_size(), current});
        }
        std::sort(out.begin(), out.end(),
                  [](const Entry& a, const Entry& b) { return a.rel_path < b.rel_path; });
        return out;
    }

    // drop entries that are not readable under the current format version
    std::size_t gc() const {
        std::size_t removed = 0;
        for (const auto& e : list()) {
            if (e.current_version) continue;
            std::error_code ec;
            if (std::filesystem::remove(root_ / e.rel_path, ec)) removed++;
        }
        // prune now-empty directories
        if (std::filesystem::exists(root_)) {
            std::vector<std::filesystem::path> dirs;
            for (const auto& d : std::filesystem::recursive_directory_iterator(root_))
                if (d.is_directory()) dirs.push_back(d.path());
            std::sort(dirs.rbegin(), dirs.rend());
            for (const auto& d : dirs) {
                std::error_code ec;
                if (std::filesystem::is_empty(d, ec) && !ec) std::filesystem::remove(d, ec);
            }
        }
        return removed;
    }

private:
    std::filesystem::path root_;

    std::filesystem::path g_path(unsigned m, unsigned n) const {
        return root_ / version_dir / "G" / ("m" + std::to_string(m) + "_n" + std::to_string(n) + ".poly");
    }
    std::filesystem::path p_path(unsigned m, unsigned n, bool full, unsigned long lead) const {
        std::string name = "m" + std::to_string(m) + "_n" + std::to_string(n);
        name += full ? "_full" : "_lead" + std::to_string(lead);
        return root_ / version_dir / "P" / (name + ".poly");
    }

    std::optional<IntPoly> load(const std::filesystem::path& p) const {
        std::ifstream in(p);
        if (!in) return std::nullopt;
        try {
            return IntPoly::from_canonical_text(in);
        } catch (const parse_error&) {
            return std::nullopt; // stale or foreign entry: ignore
        }
    }

    void store(const std::filesystem::path& p, const IntPoly& poly) const {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
        const auto tmp = p.string() + ".tmp" + std::to_string(::getpid());
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) return; // cache is best-effort
            out << poly.to_canonical_text();
        }
        std::filesystem::rename(tmp, p, ec);
        if (ec) std::filesystem::remove(tmp, ec);
    }
};

} // namespace mzp

#endif
