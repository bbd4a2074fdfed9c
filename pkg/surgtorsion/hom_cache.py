import hashlib
import logging
import os
import pickle
from typing import Callable, Dict, List, Optional, Tuple

from .exceptions import TorsionError
from .groups import PermGroup
from .homs import HomClass, SearchConstraint, enumerate_surjections
from .presentation import FinitePresentation

logger = logging.getLogger(__name__)

CachedImages = List[Tuple[int, ...]]


class HomCache:
    """
    Caches homomorphism enumerations in memory and, with a cache directory, as pickle files.

    Entries hold only image tuples; the group is supplied again on lookup.
    """
    def __init__(self, cache_dir: Optional[str] = None):
        self.cache_dir = cache_dir
        self._cache: Dict[str, CachedImages] = {}
        if cache_dir:
            os.makedirs(cache_dir, exist_ok=True)

    @staticmethod
    def key_digest(*parts) -> str:
        """Digest of any repr-stable key, for enumerations that are not presentation searches."""
        return hashlib.sha256(repr(parts).encode("utf-8")).hexdigest()

    @classmethod
    def digest(cls, presentation: FinitePresentation, group: PermGroup,
               constraint: Optional[SearchConstraint] = None) -> str:
        constraint = constraint or SearchConstraint()
        allowed = sorted((name, tuple(sorted(values))) for name, values in constraint.allowed)
        return cls.key_digest(str(presentation), group.degree, group.generators,
                              constraint.conjugate_generators, allowed)

    def _get_cache_path(self, digest: str) -> str:
        return os.path.join(self.cache_dir, f"{digest}.homs")

    def get(self, digest: str) -> Optional[CachedImages]:
        if digest in self._cache:
            return self._cache[digest]
        if not self.cache_dir:
            return None
        path = self._get_cache_path(digest)
        if os.path.exists(path):
            try:
                with open(path, 'rb') as f:
                    images = pickle.load(f)
                self._cache[digest] = images
                return images
            except (pickle.PickleError, EOFError, AttributeError, ValueError):
                logger.warning("Ignoring unreadable cache file %s", path)
                return None
        return None

    def put(self, digest: str, images: CachedImages) -> None:
        """
        Raises:
            TorsionError: If the cache file cannot be written.
        """
        self._cache[digest] = images
        if not self.cache_dir:
            return
        try:
            with open(self._get_cache_path(digest), 'wb') as f:
                pickle.dump(images, f)
        except IOError as e:
            raise TorsionError(f"Failed to write homomorphism cache {digest}: {e}")

    def clear(self) -> None:
        self._cache.clear()
        if not self.cache_dir:
            return
        try:
            for name in os.listdir(self.cache_dir):
                if name.endswith(".homs"):
                    os.remove(os.path.join(self.cache_dir, name))
        except IOError as e:
            raise TorsionError(f"Failed to clear homomorphism cache: {e}")

    def lookup(self, digest: str, compute: Callable[[], CachedImages]) -> CachedImages:
        """The cached images under ``digest``, computed and stored on a miss."""
        images = self.get(digest)
        if images is None:
            images = compute()
            self.put(digest, images)
        else:
            logger.debug("Cache hit for %s: %d entries", digest[:12], len(images))
        return images

    def enumerate(self, presentation: FinitePresentation, group: PermGroup,
                  constraint: Optional[SearchConstraint] = None) -> List[HomClass]:
        """enumerate_surjections with caching."""
        images = self.lookup(self.digest(presentation, group, constraint),
                             lambda: [h.images for h in enumerate_surjections(presentation, group, constraint)])
        return [HomClass(group, presentation.generators, tuple(x)) for x in images]
