#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "vvfm/experiment.hpp"

namespace vvfm {
namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open " + path.string() + " for writing");
    os << content;
    os.flush();
    if (!os) throw IoError("write to " + path.string() + " failed");
}

}  // namespace

std::string resolve_output_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
    return ".";
}

WrittenFiles write_report(const ExperimentReport& report, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir + (ec ? ": " + ec.message() : ""));
    const fs::path base(dir);
    WrittenFiles out{(base / (report.suite + "_report.json")).string(), (base / (report.suite + "_trends.csv")).string(),
                     (base / (report.suite + "_summary.txt")).string()};
    write_file(out.json, report.to_json().dump(2) + "\n");
    write_file(out.csv, report.trends_csv());
    write_file(out.summary, report.summary_text());
    return out;
}

}  // namespace vvfm
