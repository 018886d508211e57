/**
 * Captured service responses as base64: a default-request song (120 s,
 * seed A4, 949 notes) and a single half-second A4 note. Tests decode
 * these into the exact byte sequences a browser would receive.
 */

export const SONG_120S_B64 =
  "TVRoZAAAAAYAAAABAeBNVHJrAAAdugD/UQMHoSAAkEVQeIBFAACQbFB4gGwAAJBhUHiAYQAAkDZQeIA2AACQIVB4gCEAAJBC" +
  "UHiAQgAAkDRQeIA0AACQZVB4gGUAAJAnUHiAJwAAkD1QeIA9AACQS1B4gEsAAJB1UHiAdQAAkEFQeIBBAACQJFB4gCQAAJBh" +
  "UHiAYQAAkE9QeIBPAACQIFB4gCAAAJB1UHiAdQAAkH5QeIB+AACQaFB4gGgAAJB0UHiAdAAAkChQeIAoAACQXVB4gF0AAJBz" +
  "UHiAcwAAkFhQeIBYAACQPFB4gDwAAJANUHiADQAAkDhQeIA4AACQTlB4gE4AAJB1UHiAdQAAkHxQeIB8AACQPVB4gD0AAJBv" +
  "UHiAbwAAkCFQeIAhAACQaFB4gGgAAJBHUHiARwAAkAFQeIABAACQXVB4gF0AAJAzUHiAMwAAkGpQeIBqAACQVlB4gFYAAJAA" +
  "UHiAAAAAkD9QeIA/AACQb1B4gG8AAJAfUHiAHwAAkClQeIApAACQcFB4gHAAAJAYUHiAGAAAkElQeIBJAACQHlB4gB4AAJB8" +
  "UHiAfAAAkGdQeIBnAACQOVB4gDkAAJAKUHiACgAAkClQeIApAACQQVB4gEEAAJB4UHiAeAAAkA5QeIAOAACQR1B4gEcAAJBb" +
  "UHiAWwAAkEZQeIBGAACQaVB4gGkAAJBFUHiARQAAkHxQeIB8AACQTlB4gE4AAJBMUHiATAAAkDlQeIA5AACQTVB4gE0AAJAx" +
  "UHiAMQAAkEpQeIBKAACQJVB4gCUAAJAYUIFwgBgAAJBPUHiATwAAkFRQeIBUAACQPVB4gD0AAJALUHiACwAAkGFQeIBhAACQ" +
  "cVB4gHEAAJB3UHiAdwAAkGxQeIBsAACQc1B4gHMAAJB3UHiAdwAAkEVQeIBFAACQMlB4gDIAAJBaUHiAWgAAkCNQeIAjAACQ" +
  "aFB4gGgAAJBtUHiAbQAAkHNQeIBzAACQTFB4gEwAAJB6UHiAegAAkEtQeIBLAACQOlB4gDoAAJBVUHiAVQB4kHZQeIB2AACQ" +
  "ZlB4gGYAAJAKUHiACgAAkE9QeIBPAACQPlB4gD4AAJBRUHiAUQAAkG1QeIBtAACQH1B4gB8AAJBeUHiAXgAAkA9QeIAPAACQ" +
  "HFB4gBwAAJBmUHiAZgAAkCpQeIAqAACQaVB4gGkAAJAMUHiADAAAkBJQeIASAACQWVB4gFkAAJAFUHiABQAAkEpQeIBKAACQ" +
  "dVB4gHUAAJBEUHiARAAAkFdQeIBXAACQA1B4gAMAAJBRUHiAUQAAkE5QeIBOAACQSlB4gEoAAJAyUHiAMgAAkC9QeIAvAACQ" +
  "flB4gH4AAJAEUHiABAAAkAJQeIACAACQe1B4gHsAAJAYUHiAGAAAkBBQeIAQAACQG1B4gBsAAJBnUHiAZwAAkHhQeIB4AACQ" +
  "AlB4gAIAAJA2UHiANgAAkA1QeIANAACQIVB4gCEAAJAcUHiAHAAAkFNQeIBTAACQLVB4gC0AAJAXUHiAFwAAkEFQeIBBAACQ" +
  "BVB4gAUAAJAMUHiADAAAkH9QeIB/AACQGVB4gBkAAJAuUHiALgAAkF5QeIBeAACQa1B4gGsAAJB2UHiAdgAAkBVQeIAVAACQ" +
  "VlB4gFYAAJB8UHiAfAAAkAdQeIAHAACQVlB4gFYAAJBtUHiAbQAAkCxQeIAsAACQIFB4gCAAAJBNUHiATQAAkDlQeIA5AACQ" +
  "FlB4gBYAAJA8UHiAPAAAkDRQeIA0AACQSVB4gEkAAJBBUHiAQQAAkChQeIAoAACQLlB4gC4AAJBsUHiAbAAAkCBQeIAgAACQ" +
  "SFB4gEgAAJABUHiAAQAAkF9QeIBfAACQK1B4gCsAAJAFUHiABQAAkCRQeIAkAACQHlB4gB4AAJB6UHiAegAAkC1QeIAtAACQ" +
  "JFB4gCQAAJAuUHiALgAAkHpQeIB6AACQUVB4gFEAAJBPUHiATwAAkFxQeIBcAACQMlB4gDIAAJA1UHiANQAAkFNQeIBTAACQ" +
  "AFB4gAAAAJAYUHiAGAAAkCtQeIArAACQHlB4gB4AAJBRUHiAUQAAkDBQeIAwAACQcVB4gHEAAJBJUHiASQAAkDVQeIA1AACQ" +
  "M1B4gDMAAJBaUHiAWgAAkDZQeIA2AACQVVB4gFUAAJAGUHiABgAAkDlQeIA5AACQIVB4gCEAAJAUUHiAFAAAkERQeIBEAACQ" +
  "P1B4gD8AAJBIUHiASAAAkGFQeIBhAACQclB4gHIAAJBAUHiAQAAAkChQeIAoAACQPFB4gDwAAJBoUHiAaAAAkHBQeIBwAACQ" +
  "aFB4gGgAAJAYUHiAGAB4kFFQeIBRAACQClB4gAoAAJBdUHiAXQAAkH9QeIB/AACQM1B4gDMAAJBWUHiAVgAAkChQeIAoAACQ" +
  "G1B4gBsAAJBcUHiAXAAAkABQeIAAAACQaVB4gGkAAJBEUHiARAAAkAxQeIAMAACQD1B4gA8AAJBTUHiAUwAAkHBQeIBwAACQ" +
  "JFB4gCQAAJB+UHiAfgAAkA1QeIANAACQblB4gG4AAJAzUHiAMwAAkApQeIAKAACQI1B4gCMAAJA6UHiAOgAAkGZQeIBmAACQ" +
  "b1B4gG8AAJARUHiAEQAAkENQeIBDAACQVFB4gFQAAJAsUHiALAAAkHBQeIBwAACQI1B4gCMAAJACUHiAAgAAkAVQeIAFAACQ" +
  "V1B4gFcAAJBIUHiASAAAkHpQeIB6AACQeVB4gHkAAJB1UHiAdQAAkAVQeIAFAACQYFB4gGAAAJBaUHiAWgAAkFRQeIBUAACQ" +
  "W1B4gFsAAJB0UHiAdAAAkFJQeIBSAACQMFB4gDAAAJBFUHiARQAAkBpQeIAaAACQS1B4gEsAAJABUHiAAQAAkBNQeIATAACQ" +
  "K1B4gCsAAJBlUHiAZQAAkFxQeIBcAACQLFB4gCwAAJBQUHiAUAAAkAVQeIAFAACQFVB4gBUAAJB+UHiAfgAAkCVQeIAlAACQ" +
  "M1B4gDMAAJBHUHiARwAAkCVQeIAlAACQPVB4gD0AAJAeUHiAHgAAkAZQeIAGAACQF1B4gBcAAJBDUHiAQwAAkAlQeIAJAACQ" +
  "M1B4gDMAAJAqUHiAKgAAkDVQeIA1AACQDFB4gAwAAJB1UHiAdQAAkD1QeIA9AACQbFB4gGwAAJB9UHiAfQAAkCxQeIAsAACQ" +
  "PVB4gD0AAJBZUHiAWQAAkDZQeIA2AACQJlB4gCYAAJBeUHiAXgAAkHNQeIBzAACQdlB4gHYAAJBQUHiAUAAAkDBQeIAwAACQ" +
  "fVB4gH0AAJBSUHiAUgAAkAhQeIAIAACQClB4gAoAAJBgUHiAYAAAkAdQeIAHAACQAFB4gAAAAJAyUHiAMgAAkENQeIBDAACQ" +
  "OlB4gDoAAJA/UHiAPwAAkEtQeIBLAACQWFB4gFgAAJA2UHiANgAAkC9QeIAvAACQf1B4gH8AAJAhUHiAIQAAkGRQeIBkAACQ" +
  "N1B4gDcAAJAuUHiALgAAkAhQeIAIAACQb1B4gG8AAJBaUHiAWgAAkHRQeIB0AACQOlB4gDoAAJBWUHiAVgAAkA9QeIAPAACQ" +
  "M1B4gDMAAJAaUHiAGgAAkAVQeIAFAACQelB4gHoAAJAbUHiAGwAAkBJQeIASAACQGVB4gBkAAJAwUHiAMAAAkEZQeIBGAACQ" +
  "E1B4gBMAAJB/UHiAfwAAkH5QeIB+AACQE1B4gBMAAJA0UHiANAAAkFhQeIBYAACQcVB4gHEAAJBAUHiAQAAAkHZQeIB2AACQ" +
  "KVB4gCkAAJBAUIFwgEAAAJBWUHiAVgAAkBlQeIAZAACQTlB4gE4AAJAcUHiAHAAAkCtQeIArAACQfFB4gHwAAJBzUHiAcwAA" +
  "kGlQeIBpAACQBFB4gAQAAJATUHiAEwAAkCBQeIAgAACQZFB4gGQAAJBsUHiAbAAAkEtQeIBLAACQXFB4gFwAAJBnUHiAZwAA" +
  "kAhQeIAIAACQClB4gAoAAJBwUHiAcAAAkAVQeIAFAACQHVB4gB0AAJAFUHiABQAAkAFQeIABAACQbVB4gG0AAJAqUHiAKgAA" +
  "kBRQeIAUAACQE1B4gBMAAJBUUHiAVAAAkHxQeIB8AACQQVB4gEEAAJB0UHiAdAAAkEBQeIBAAACQSlB4gEoAAJBXUHiAVwAA" +
  "kGdQeIBnAACQYVB4gGEAAJB/UHiAfwAAkGBQeIBgAACQdFB4gHQAAJAaUHiAGgAAkEVQeIBFAACQTVB4gE0AAJBqUHiAagAA" +
  "kD5QeIA+AACQZVB4gGUAAJAxUHiAMQAAkEtQeIBLAACQbVB4gG0AAJBmUHiAZgAAkFRQeIBUAACQAFB4gAAAAJAXUHiAFwAA" +
  "kEFQeIBBAACQIFB4gCAAAJAIUHiACAAAkG5QeIBuAACQeVB4gHkAAJAmUHiAJgAAkDRQeIA0AACQaFB4gGgAAJAIUHiACAAA" +
  "kFJQeIBSAACQEFB4gBAAAJAlUHiAJQAAkGtQeIBrAACQB1B4gAcAAJAEUHiABAAAkDZQeIA2AACQP1B4gD8AAJBvUHiAbwAA" +
  "kFxQeIBcAACQV1B4gFcAAJATUHiAEwAAkH9QeIB/AACQNVB4gDUAAJBPUHiATwAAkDFQeIAxAACQBVB4gAUAAJA8UHiAPAAA" +
  "kBNQeIATAACQBFB4gAQAAJBPUHiATwAAkFFQeIBRAACQDVB4gA0AAJBGUHiARgAAkCxQeIAsAACQMVB4gDEAAJBjUHiAYwAA" +
  "kD9QeIA/AACQcVB4gHEAAJBOUHiATgAAkDxQeIA8AACQUVB4gFEAAJArUHiAKwAAkBBQeIAQAACQWFB4gFgAAJBQUHiAUAAA" +
  "kGVQeIBlAACQEFB4gBAAAJB1UHiAdQAAkGdQeIBnAACQdlB4gHYAAJBwUHiAcAAAkFhQeIBYAACQaFB4gGgAAJBDUHiAQwAA" +
  "kGVQeIBlAACQGFB4gBgAAJBkUHiAZAAAkDlQeIA5AACQYVB4gGEAAJA6UHiAOgAAkGVQeIBlAACQCVB4gAkAAJAFUHiABQAA" +
  "kHhQeIB4AACQPlB4gD4AAJB0UHiAdAAAkHlQeIB5AACQVVB4gFUAAJBJUHiASQAAkBtQeIAbAACQDFB4gAwAAJBpUHiAaQAA" +
  "kHJQeIByAACQZFB4gGQAAJBZUHiAWQAAkDZQeIA2AACQJ1B4gCcAAJAOUHiADgAAkDdQeIA3AACQSVB4gEkAAJB3UHiAdwAA" +
  "kHhQeIB4AACQNVB4gDUAAJAMUHiADAAAkGRQeIBkAACQX1B4gF8AAJADUHiAAwAAkDlQeIA5AACQWVB4gFkAAJADUHiAAwAA" +
  "kHZQeIB2AACQfFB4gHwAAJBdUHiAXQAAkApQeIAKAACQCFB4gAgAAJAuUHiALgAAkANQeIADAACQLFB4gCwAAJABUHiAAQAA" +
  "kH1QeIB9AACQaVB4gGkAAJAJUHiACQAAkHNQeIBzAACQGlCBcIAaAACQVlB4gFYAAJB5UHiAeQAAkA9QeIAPAACQAFB4gAAA" +
  "AJAvUHiALwAAkANQeIADAACQTlB4gE4AAJBuUHiAbgAAkBhQeIAYAACQDlB4gA4AAJAsUHiALAAAkHtQeIB7AACQEFB4gBAA" +
  "AJB8UHiAfAAAkC5QeIAuAACQPVB4gD0AAJAlUHiAJQAAkHhQeIB4AACQe1B4gHsAAJBSUHiAUgAAkBdQeIAXAHiQDVB4gA0A" +
  "AJBLUHiASwAAkBRQeIAUAACQc1B4gHMAAJB5UHiAeQAAkGdQeIBnAACQKFB4gCgAAJAfUHiAHwAAkGFQeIBhAACQJVB4gCUA" +
  "AJA2UHiANgAAkAVQeIAFAACQEVB4gBEAAJACUHiAAgAAkApQeIAKAACQCVB4gAkAAJA2UHiANgAAkEdQeIBHAACQX1B4gF8A" +
  "AJASUHiAEgAAkDZQeIA2AACQUlB4gFIAAJAKUHiACgAAkDlQeIA5AACQL1B4gC8AAJB6UHiAegAAkAdQeIAHAACQNFB4gDQA" +
  "AJA1UHiANQAAkF1QeIBdAACQKVB4gCkAAJAaUHiAGgAAkCVQeIAlAACQPFB4gDwAAJB6UHiAegAAkGZQeIBmAACQI1B4gCMA" +
  "AJBIUHiASAAAkFhQeIBYAACQZlB4gGYAAJA5UHiAOQAAkDNQeIAzAACQYlB4gGIAAJA3UHiANwAAkCBQeIAgAACQOlB4gDoA" +
  "AJB4UHiAeAAAkBJQeIASAACQO1B4gDsAAJBSUHiAUgAAkD5QeIA+AACQGlB4gBoAAJAAUHiAAAAAkFpQeIBaAACQT1B4gE8A" +
  "AJAAUHiAAAAAkCZQeIAmAACQY1B4gGMAAJBRUHiAUQAAkEZQeIBGAACQFFB4gBQAAJBbUHiAWwAAkD1QeIA9AACQV1B4gFcA" +
  "AJBiUHiAYgAAkB5QeIAeAACQYlB4gGIAAJAkUHiAJAAAkH5QeIB+AACQD1B4gA8AAJBxUHiAcQAAkAVQeIAFAACQIVB4gCEA" +
  "AJBEUHiARAAAkEtQeIBLAACQM1B4gDMAAJANUHiADQAAkCBQeIAgAACQJFB4gCQAAJBhUHiAYQAAkHVQeIB1AACQTFB4gEwA" +
  "AJAEUHiABAAAkGZQeIBmAACQJ1B4gCcAAJAsUHiALAAAkERQeIBEAACQIFB4gCAAAJB2UHiAdgAAkBVQeIAVAACQNVB4gDUA" +
  "AJAlUHiAJQAAkENQeIBDAACQSlB4gEoAAJBRUHiAUQAAkERQeIBEAACQNVB4gDUAAJBSUHiAUgAAkDRQeIA0AACQZFB4gGQA" +
  "AJBlUHiAZQAAkCVQeIAlAACQMFB4gDAAAJBRUHiAUQAAkBRQeIAUAACQWVB4gFkAAJAxUHiAMQAAkExQeIBMAACQEVB4gBEA" +
  "AJBVUHiAVQAAkC1QeIAtAACQPFB4gDwAAJA1UHiANQAAkD1QeIA9AACQWVB4gFkAAJAoUHiAKAAAkFNQeIBTAACQB1B4gAcA" +
  "AJAmUHiAJgAAkGBQeIBgAACQBlB4gAYAAJBQUHiAUAAAkANQeIADAACQPFB4gDwAAJByUHiAcgAAkAFQeIABAACQRFB4gEQA" +
  "AJAIUHiACAAAkHBQeIBwAACQWFB4gFgAAJBfUHiAXwAAkFZQeIBWAACQAFB4gAAAAJAFUHiABQAAkFBQeIBQAHiQcFB4gHAA" +
  "AJBaUHiAWgAAkF1QeIBdAACQHVB4gB0AAJBgUHiAYAAAkCVQeIAlAACQDVB4gA0AAJA7UHiAOwAAkCpQeIAqAACQFVB4gBUA" +
  "AJA2UHiANgAAkHNQeIBzAACQOFB4gDgAAJA5UHiAOQAAkFtQeIBbAACQQ1B4gEMAAJAQUHiAEAAAkHVQeIB1AACQOVB4gDkA" +
  "AJBlUHiAZQAAkDJQeIAyAACQaFB4gGgAAJAyUHiAMgAAkBxQeIAcAACQGVB4gBkAAJB5UHiAeQAAkEtQeIBLAACQBlB4gAYA" +
  "AJAyUHiAMgAAkB5QeIAeAACQClB4gAoAAJAYUHiAGAAAkAdQeIAHAACQUlB4gFIAAJAWUHiAFgAAkE5QeIBOAACQT1B4gE8A" +
  "AJBaUHiAWgAAkEJQeIBCAACQJFB4gCQAAJBxUHiAcQAAkC1QeIAtAACQO1B4gDsAAJBRUHiAUQAAkEJQeIBCAACQe1CBcIB7" +
  "AACQeFCBcIB4AACQS1B4gEsAAJA/UHiAPwAAkFpQeIBaAACQG1B4gBsAAJAiUHiAIgAAkAVQeIAFAACQFFB4gBQAAJAAUHiA" +
  "AAAAkFRQeIBUAACQEVB4gBEAAJBlUHiAZQAAkFdQeIBXAACQfVB4gH0AAJAzUHiAMwAAkHZQeIB2AACQOlB4gDoAAJArUHiA" +
  "KwAAkA1QeIANAACQcVB4gHEAAJBmUHiAZgAAkClQeIApAACQOlB4gDoAAJApUHiAKQAAkANQeIADAACQBVB4gAUAAJAvUHiA" +
  "LwAAkBpQeIAaAACQQ1B4gEMAAJAYUHiAGAAAkBpQeIAaAACQVlB4gFYAAJBfUHiAXwAAkChQeIAoAACQb1B4gG8AAJAgUHiA" +
  "IAAAkCxQeIAsAACQXFB4gFwAAJAFUHiABQAAkHhQeIB4AACQCVB4gAkAAJA7UHiAOwAAkF1QeIBdAACQBVB4gAUAAJBoUHiA" +
  "aAAAkH5QeIB+AACQO1B4gDsAAJAPUHiADwAAkApQeIAKAACQDFB4gAwAAJBiUHiAYgAAkDVQeIA1AACQdlB4gHYAAJA4UHiA" +
  "OAAAkAlQeIAJAACQNlB4gDYAAJBhUHiAYQAAkGpQeIBqAACQBFB4gAQAAJAXUHiAFwAAkD9QeIA/AACQEFB4gBAAAJBwUHiA" +
  "cAAAkHhQeIB4AACQKVB4gCkAAJA4UHiAOAAAkEhQeIBIAACQJFB4gCQAAJBGUHiARgAAkBlQeIAZAACQJlB4gCYAAJA5UHiA" +
  "OQAAkE5QeIBOAACQRVB4gEUAAJAhUHiAIQAAkB1QeIAdAACQD1B4gA8AAJBlUHiAZQAAkAxQeIAMAACQXlB4gF4AAJAfUHiA" +
  "HwAAkCRQeIAkAACQXlB4gF4AAJBVUHiAVQAAkF9QeIBfAACQQlB4gEIAAJBuUHiAbgAAkA9QeIAPAACQU1B4gFMAAJAPUHiA" +
  "DwAAkF5QeIBeAACQLlB4gC4AAJBWUHiAVgAAkFpQeIBaAACQVFB4gFQAAJAcUHiAHAAAkGpQeIBqAACQHlB4gB4AAJBCUHiA" +
  "QgAAkFZQeIBWAACQHlB4gB4AAJBRUHiAUQAAkCRQeIAkAACQFlB4gBYAAJBoUHiAaAAAkEdQeIBHAACQKlB4gCoAAJBLUHiA" +
  "SwAAkANQeIADAACQEFB4gBAAAJAzUHiAMwAAkH1QeIB9AACQQlB4gEIAAJAJUHiACQAAkGJQeIBiAACQZFCBcIBkAACQSVB4" +
  "gEkAAJBaUHiAWgAAkBtQeIAbAACQXlB4gF4AAJBpUHiAaQAAkGFQeIBhAACQLVB4gC0AAJBMUHiATAAAkFFQeIBRAACQdFB4" +
  "gHQAAJANUHiADQAAkGtQeIBrAACQQ1B4gEMAAJAuUHiALgAAkDpQeIA6AACQAVB4gAEAAJAcUHiAHAAAkFNQeIBTAACQVFB4" +
  "gFQAAJA/UHiAPwAAkHtQeIB7AACQPlB4gD4AAJAoUHiAKAAAkG1QeIBtAACQIVB4gCEAAJBNUHiATQAAkFpQeIBaAACQalB4" +
  "gGoAAJBlUHiAZQAAkDFQeIAxAACQB1B4gAcAAJAEUHiABAAAkF1QeIBdAACQfFB4gHwAAJAsUHiALAAAkDlQeIA5AACQXVB4" +
  "gF0AAJBUUHiAVAAAkCFQeIAhAACQVlB4gFYAAJAnUHiAJwAAkC5QeIAuAACQRVB4gEUAAJBeUHiAXgAAkBNQeIATAACQAlB4" +
  "gAIAAJBQUHiAUAAAkANQeIADAACQBVB4gAUAAJAdUHiAHQAAkFRQeIBUAACQCFCBcIAIAACQfVB4gH0AAJA2UHiANgAAkHNQ" +
  "eIBzAACQHFB4gBwAAJA4UHiAOAAAkC5QeIAuAACQFlB4gBYAAJAqUHiAKgAAkH9QeIB/AACQYFB4gGAAAJAxUHiAMQAAkDRQ" +
  "eIA0AACQIVB4gCEAAJBEUHiARAAAkF9QeIBfAACQWVB4gFkAAJA7UHiAOwAAkAVQeIAFAACQdlB4gHYAAJA0UHiANAAAkDJQ" +
  "eIAyAACQAFB4gAAAAJARUHiAEQAAkG9QeIBvAACQQlB4gEIAAJBeUHiAXgAAkBJQeIASAACQKlB4gCoAAJBsUHiAbAAAkGlQ" +
  "eIBpAACQH1B4gB8AAJACUHiAAgAAkGdQeIBnAACQFVB4gBUAAJBlUHiAZQAAkFdQeIBXAACQFVB4gBUAAJAKUHiACgAAkHdQ" +
  "eIB3AACQTVB4gE0AAJBPUHiATwAAkDpQeIA6AACQE1B4gBMAAJBNUHiATQAAkCBQeIAgAACQZ1B4gGcAAJBeUHiAXgAAkANQ" +
  "eIADAACQeFB4gHgAAJAEUHiABAAAkAtQeIALAACQJVB4gCUAAJATUHiAEwAAkB5QeIAeAACQLlB4gC4AAJBeUHiAXgAAkDRQ" +
  "eIA0AACQIlB4gCIAAJA/UHiAPwAAkDJQeIAyAACQKFB4gCgAAJBzUHiAcwAAkEdQeIBHAACQflB4gH4AAJBjUHiAYwAAkElQ" +
  "eIBJAACQIVB4gCEAAJBYUHiAWAAAkDpQeIA6AACQXFB4gFwAAJA0UHiANAAAkD9QeIA/AACQAlB4gAIAAJBfUHiAXwAA/y8A";

export const ONE_NOTE_B64 = "TVRoZAAAAAYAAAABAeBNVHJrAAAAFAD/UQMHoSAAkEVQg2CARQAA/y8A";

export function decodeBase64(text: string): Uint8Array {
  const binary = atob(text);
  const bytes = new Uint8Array(binary.length);
  for (let i = 0; i < binary.length; i++) {
    bytes[i] = binary.charCodeAt(i);
  }
  return bytes;
}
