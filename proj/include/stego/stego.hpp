#ifndef STEGO_STEGO_HPP_INCLUDED
#define STEGO_STEGO_HPP_INCLUDED

#include <stego/bitplane.hpp>
#include <stego/counters.hpp>
#include <stego/decompose.hpp>
#include <stego/manifest_io.hpp>
#include <stego/matrix.hpp>
#include <stego/metrics.hpp>
#include <stego/pgm.hpp>
#include <stego/pipeline.hpp>

#endif // STEGO_STEGO_HPP_INCLUDED
