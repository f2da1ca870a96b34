#pragma once
// bijenc.hpp - umbrella header.

#include <bijenc/bbase.hpp>
#include <bijenc/error.hpp>
#include <bijenc/nat.hpp>
#include <bijenc/sigcodec.hpp>
#include <bijenc/skeleton.hpp>
#include <bijenc/term.hpp>
#include <bijenc/tuple.hpp>
