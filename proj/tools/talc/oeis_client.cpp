#include "oeis_client.hpp"

#include <filesystem>
#include <fstream>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "talc/errors.hpp"
#include "talc/io/bfile.hpp"

namespace talc::cli {

std::string bfile_name(const std::string& oeis_id) {
    if (oeis_id.size() < 2 || oeis_id[0] != 'A')
        throw fetch_error("bad OEIS id: " + oeis_id);
    return "b" + oeis_id.substr(1) + ".txt";
}

std::string OeisClient::cache_path(const std::string& oeis_id) const {
    return (std::filesystem::path(cache_dir) / bfile_name(oeis_id)).string();
}

std::vector<Int> OeisClient::terms(const std::string& oeis_id) const {
    if (const auto golden = golden_prefix(oeis_id)) return golden->values;

    if (!cache_dir.empty()) {
        std::ifstream in(cache_path(oeis_id));
        if (in.good()) return parse_bfile(in);
    }

    if (offline || !fetch_enabled)
        throw fetch_error(oeis_id + ": no embedded prefix or cached b-file" +
                          (offline ? " (offline mode)" : "; pass --fetch to download"));

    httplib::SSLClient client("oeis.org");
    client.set_follow_location(true);
    const std::string path = "/" + oeis_id + "/" + bfile_name(oeis_id);
    const auto response = client.Get(path);
    if (!response || response->status != 200)
        throw fetch_error("GET https://oeis.org" + path + " failed" +
                          (response ? " with status " + std::to_string(response->status) : ""));
    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        std::ofstream out(cache_path(oeis_id));
        out << response->body;
    }
    return parse_bfile_string(response->body);
}

}  // namespace talc::cli
