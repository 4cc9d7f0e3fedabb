#include "streetlink/ppm.hpp"

#include "streetlink/errors.hpp"

#include <cstdio>

namespace streetlink {

void write_map_ppm(const GridMap& map, const std::string& path) {
    static const unsigned char palette[5][3] = {
        {26, 28, 44}, {58, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}};

    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f)
        throw IoError("cannot write heatmap file: " + path);
    std::fprintf(f, "P6\n%d %d\n255\n", map.nx, map.ny);
    std::vector<unsigned char> row(static_cast<size_t>(map.nx) * 3);
    for (int iy = map.ny - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < map.nx; ++ix) {
            int level = map.levels[static_cast<size_t>(iy) * map.nx + ix];
            if (level < 0)
                level = 0;
            if (level > 4)
                level = 4;
            row[3 * ix + 0] = palette[level][0];
            row[3 * ix + 1] = palette[level][1];
            row[3 * ix + 2] = palette[level][2];
        }
        std::fwrite(row.data(), 1, row.size(), f);
    }
    if (std::fclose(f) != 0)
        throw IoError("failed to finish writing: " + path);
}

} // namespace streetlink
