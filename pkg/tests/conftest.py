import numpy as np
import pytest

from wavemark.codec import EmbedConfig, authenticate_pixels, embed_pixels
from wavemark.synth import make_test_image

CORPUS_SIZE = 512
CORPUS_COUNT = 10


@pytest.fixture(scope="session")
def corpus_images():
    """Ten deterministic 512x512 synthetic covers."""
    return [(f"synthetic_{i:02d}", make_test_image(i, CORPUS_SIZE))
            for i in range(CORPUS_COUNT)]


@pytest.fixture(scope="session")
def corpus_runs(corpus_images):
    """Embed + authenticate every cover in both modes, once per session.

    Maps mode -> list of (name, cover, stego, report).
    """
    runs = {}
    for mode in ("set1", "set1set2"):
        cfg = EmbedConfig(mode=mode)
        entries = []
        for name, cover in corpus_images:
            stego, _ = embed_pixels(cover, cfg)
            entries.append((name, cover, stego, authenticate_pixels(stego, cfg)))
        runs[mode] = entries
    return runs


@pytest.fixture(scope="session")
def corpus_dir(tmp_path_factory, corpus_images):
    """The synthetic corpus written out as PGM files."""
    from wavemark.pgm import Image, save

    directory = tmp_path_factory.mktemp("corpus")
    for name, cover in corpus_images:
        save(directory / f"{name}.pgm", Image(cover))
    return directory


@pytest.fixture()
def rng():
    return np.random.default_rng(20240811)
