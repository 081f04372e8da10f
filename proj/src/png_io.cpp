#include "pose/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <memory>
#include <stdexcept>

namespace pose {

namespace {

struct FileCloser {
  void operator()(FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

[[noreturn]] void fail(const std::string& what, const std::string& path) {
  throw std::runtime_error(what + ": " + path);
}

}  // namespace

void write_png_rgb(const std::string& path, const Image& img) {
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) fail("cannot open for writing", path);

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (!png || !info || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail("png write error", path);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < img.height; ++y) {
    png_write_row(png, const_cast<png_bytep>(img.px(0, y)));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

Image read_png_rgb(const std::string& path) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) fail("cannot open", path);

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (!png || !info || setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail("png read error", path);
  }
  png_init_io(png, fp.get());
  png_read_info(png, info);

  png_set_expand(png);
  png_set_strip_16(png);
  png_set_strip_alpha(png);
  png_set_gray_to_rgb(png);
  png_read_update_info(png, info);

  const int w = static_cast<int>(png_get_image_width(png, info));
  const int h = static_cast<int>(png_get_image_height(png, info));
  if (png_get_rowbytes(png, info) != static_cast<size_t>(w) * 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail("unexpected png layout", path);
  }

  Image img(w, h);
  for (int y = 0; y < h; ++y) {
    png_read_row(png, img.px(0, y), nullptr);
  }
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

void write_png_gray16(const std::string& path, int width, int height,
                      const std::vector<uint16_t>& data) {
  if (data.size() != static_cast<size_t>(width) * height)
    throw std::invalid_argument("gray16 buffer size mismatch");
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) fail("cannot open for writing", path);

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (!png || !info || setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail("png write error", path);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, width, height, 16, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  std::vector<uint8_t> row(static_cast<size_t>(width) * 2);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const uint16_t v = data[static_cast<size_t>(y) * width + x];
      row[2 * x] = static_cast<uint8_t>(v >> 8);  // network byte order
      row[2 * x + 1] = static_cast<uint8_t>(v & 0xff);
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

std::vector<uint16_t> read_png_gray16(const std::string& path, int& width, int& height) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) fail("cannot open", path);

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (!png || !info || setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail("png read error", path);
  }
  png_init_io(png, fp.get());
  png_read_info(png, info);

  if (png_get_color_type(png, info) != PNG_COLOR_TYPE_GRAY ||
      png_get_bit_depth(png, info) != 16) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail("expected 16-bit grayscale png", path);
  }
  width = static_cast<int>(png_get_image_width(png, info));
  height = static_cast<int>(png_get_image_height(png, info));

  std::vector<uint16_t> out(static_cast<size_t>(width) * height);
  std::vector<uint8_t> row(static_cast<size_t>(width) * 2);
  for (int y = 0; y < height; ++y) {
    png_read_row(png, row.data(), nullptr);
    for (int x = 0; x < width; ++x) {
      out[static_cast<size_t>(y) * width + x] =
          static_cast<uint16_t>((row[2 * x] << 8) | row[2 * x + 1]);
    }
  }
  png_destroy_read_struct(&png, &info, nullptr);
  return out;
}

}  // namespace pose
