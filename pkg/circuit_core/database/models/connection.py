"""
Circuit Core - Database Connection Helpers
Utilities for creating results-store connections
"""

import logging
from typing import Optional

from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker

from ...config import DATABASE

logger = logging.getLogger(__name__)


def create_db_engine(url: Optional[str] = None, echo: Optional[bool] = None):
    """
    Create SQLAlchemy engine for the results store

    Args:
        url: Any SQLAlchemy URL (default: DATABASE['url'])
        echo: If True, log all SQL statements (default: DATABASE['echo'])

    Returns:
        SQLAlchemy engine
    """
    url = url or DATABASE['url']
    echo = DATABASE['echo'] if echo is None else echo
    logger.debug(f"Creating engine for {url.split('@')[-1]}")
    return create_engine(url, echo=echo)


def create_db_session(engine):
    """
    Create SQLAlchemy session from engine

    Args:
        engine: SQLAlchemy engine

    Returns:
        SQLAlchemy session
    """
    Session = sessionmaker(bind=engine)
    return Session()


def get_db_connection(url: Optional[str] = None, echo: Optional[bool] = None):
    """
    Convenience function to get both engine and session

    Returns:
        tuple: (engine, session)
    """
    engine = create_db_engine(url, echo)
    session = create_db_session(engine)
    return engine, session
