#include "image_io.hpp"

#include <png.h>

#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>

#include "trailnav/errors.hpp"

namespace trailnav::detail {
namespace {

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_pgm_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
    } else if (!std::isspace(c)) {
      tok.push_back(static_cast<char>(c));
      while ((c = in.peek()) != EOF && !std::isspace(c) && c != '#') {
        tok.push_back(static_cast<char>(in.get()));
      }
      return tok;
    }
  }
  return tok;
}

Gray8 load_pgm(std::ifstream& in, const std::filesystem::path& path) {
  std::string magic = next_pgm_token(in);
  if (magic != "P5") {
    throw MalformedImageError("not a binary PGM (P5): " + path.string());
  }
  long w = 0, h = 0, maxval = 0;
  try {
    w = std::stol(next_pgm_token(in));
    h = std::stol(next_pgm_token(in));
    maxval = std::stol(next_pgm_token(in));
  } catch (const std::exception&) {
    throw MalformedImageError("bad PGM header in " + path.string());
  }
  if (w < 1 || h < 1 || maxval < 1 || maxval > 255) {
    throw MalformedImageError("bad PGM dimensions/maxval in " + path.string());
  }
  in.get();  // single whitespace byte after maxval
  Gray8 img{static_cast<int>(w), static_cast<int>(h), {}};
  img.bytes.resize(static_cast<std::size_t>(w) * h);
  in.read(reinterpret_cast<char*>(img.bytes.data()),
          static_cast<std::streamsize>(img.bytes.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.bytes.size())) {
    throw MalformedImageError("truncated PGM payload in " + path.string());
  }
  return img;
}

struct PngReadCtx {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReadCtx() { png_destroy_read_struct(&png, &info, nullptr); }
};

Gray8 load_png(std::FILE* fp, const std::filesystem::path& path) {
  PngReadCtx ctx;
  ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!ctx.png) throw MalformedImageError("libpng init failed");
  ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.info) throw MalformedImageError("libpng init failed");

  if (setjmp(png_jmpbuf(ctx.png))) {
    throw MalformedImageError("corrupt PNG: " + path.string());
  }
  png_init_io(ctx.png, fp);
  png_read_info(ctx.png, ctx.info);

  const png_uint_32 w = png_get_image_width(ctx.png, ctx.info);
  const png_uint_32 h = png_get_image_height(ctx.png, ctx.info);
  const int color = png_get_color_type(ctx.png, ctx.info);
  const int depth = png_get_bit_depth(ctx.png, ctx.info);

  if (color != PNG_COLOR_TYPE_GRAY || depth > 8) {
    throw MalformedImageError("PNG is not 8-bit single-channel: " + path.string());
  }
  if (depth < 8) png_set_expand_gray_1_2_4_to_8(ctx.png);
  png_read_update_info(ctx.png, ctx.info);

  Gray8 img{static_cast<int>(w), static_cast<int>(h), {}};
  img.bytes.resize(static_cast<std::size_t>(w) * h);
  std::vector<png_bytep> rows(h);
  for (png_uint_32 y = 0; y < h; ++y)
    rows[y] = img.bytes.data() + static_cast<std::size_t>(y) * w;
  png_read_image(ctx.png, rows.data());
  png_read_end(ctx.png, nullptr);
  return img;
}

void save_png(const Gray8& img, const std::filesystem::path& path) {
  std::unique_ptr<std::FILE, int (*)(std::FILE*)> fp(std::fopen(path.string().c_str(), "wb"),
                                                     std::fclose);
  if (!fp) throw IoError("cannot open for writing: " + path.string());

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw IoError("libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("PNG write failed: " + path.string());
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < img.height; ++y) {
    png_write_row(png,
                  const_cast<png_bytep>(img.bytes.data() + static_cast<std::size_t>(y) * img.width));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

void save_pgm(const Gray8& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.bytes.data()),
            static_cast<std::streamsize>(img.bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

Gray8 load_gray8(const std::filesystem::path& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) {
    throw MissingFileError("no such image file: " + path.string());
  }
  std::array<unsigned char, 8> magic{};
  probe.read(reinterpret_cast<char*>(magic.data()), magic.size());
  const auto got = probe.gcount();
  probe.close();

  if (got >= 8 && png_sig_cmp(magic.data(), 0, 8) == 0) {
    std::unique_ptr<std::FILE, int (*)(std::FILE*)> fp(std::fopen(path.string().c_str(), "rb"),
                                                       std::fclose);
    if (!fp) throw MissingFileError("cannot open: " + path.string());
    return load_png(fp.get(), path);
  }
  if (got >= 2 && magic[0] == 'P' && magic[1] == '5') {
    std::ifstream in(path, std::ios::binary);
    return load_pgm(in, path);
  }
  throw MalformedImageError("unrecognized image format: " + path.string());
}

void save_gray8(const Gray8& img, const std::filesystem::path& path) {
  if (img.width < 1 || img.height < 1 ||
      img.bytes.size() != static_cast<std::size_t>(img.width) * img.height) {
    throw MalformedImageError("image buffer does not match its dimensions");
  }
  if (path.extension() == ".png") {
    save_png(img, path);
  } else {
    save_pgm(img, path);
  }
}

}  // namespace trailnav::detail
