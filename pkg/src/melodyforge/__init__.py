"""melodyforge: train an attention seq2seq model on MIDI and generate music."""

__version__ = "0.1.0"
