import os
from typing import Optional

from git import Repo, InvalidGitRepositoryError, NoSuchPathError


def get_current_commit_hash(path: Optional[str] = None) -> Optional[str]:
    try:
        repo = Repo(path or os.getcwd(), search_parent_directories=True)
    except (InvalidGitRepositoryError, NoSuchPathError):
        return None

    if not repo.head.is_valid():
        return None

    return repo.head.commit.hexsha


def is_dirty_worktree(path: Optional[str] = None) -> Optional[bool]:
    try:
        repo = Repo(path or os.getcwd(), search_parent_directories=True)
    except (InvalidGitRepositoryError, NoSuchPathError):
        return None

    return repo.is_dirty()
