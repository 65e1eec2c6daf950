#ifndef MSCODES_MSCODES_HPP
#define MSCODES_MSCODES_HPP

#include "bigint.hpp"
#include "bounds.hpp"
#include "channel.hpp"
#include "codes.hpp"
#include "commands.hpp"
#include "errors.hpp"
#include "json_io.hpp"
#include "multiset.hpp"
#include "search.hpp"
#include "sidon.hpp"
#include "version.hpp"

#endif  // MSCODES_MSCODES_HPP
