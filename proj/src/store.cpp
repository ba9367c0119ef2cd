#include "rigging/store.hpp"

#include <fstream>

namespace rigging {

HashRef TwistStore::put(const Twist& t) {
    HashRef id = hash_twist(t);
    twists_.emplace(id, t);
    return id;
}

const Twist* TwistStore::find(const HashRef& id) const {
    auto it = twists_.find(id);
    return it == twists_.end() ? nullptr : &it->second;
}

void TwistStore::save_dir(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);
    for (const auto& [id, twist] : twists_) {
        Bytes enc = encode_twist(twist);
        std::ofstream out(dir / (id.hex() + ".twist"), std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write twist file in " + dir.string());
        out.write(reinterpret_cast<const char*>(enc.data()), static_cast<std::streamsize>(enc.size()));
    }
}

TwistStore TwistStore::load_dir(const std::filesystem::path& dir) {
    TwistStore store;
    if (!std::filesystem::is_directory(dir)) throw Error("not a directory: " + dir.string());
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".twist") continue;
        std::ifstream in(entry.path(), std::ios::binary);
        Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        Twist t = decode_twist(data);
        HashRef id = store.put(t);
        if (id.hex() != entry.path().stem().string()) {
            throw DecodingError("twist file name does not match content hash: " + entry.path().string());
        }
    }
    return store;
}

}  // namespace rigging
