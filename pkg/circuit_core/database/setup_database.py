#!/usr/bin/env python3
"""
Circuit Core - Database Setup Script
Create the results-store tables on any SQLAlchemy URL
"""

import argparse
import logging
import sys

from sqlalchemy.exc import SQLAlchemyError

from ..config import get_database_url
from .models import Base, create_db_engine

logger = logging.getLogger(__name__)


def create_tables(engine) -> bool:
    """
    Create every results table that does not exist yet

    Args:
        engine: SQLAlchemy engine

    Returns:
        bool: True on success
    """
    try:
        Base.metadata.create_all(engine)
    except SQLAlchemyError as e:
        logger.error(f"✗ Error creating tables: {e}", exc_info=True)
        return False

    for table in sorted(Base.metadata.tables):
        logger.info(f"✓ Table ready: {table}")
    return True


def main(argv=None):
    parser = argparse.ArgumentParser(
        description='Create the circuit-core results database tables'
    )
    parser.add_argument('--url', default=get_database_url(), help='SQLAlchemy database URL')
    parser.add_argument('--echo', action='store_true', help='Log every SQL statement')
    args = parser.parse_args(argv)

    logging.basicConfig(level=logging.INFO, format='%(message)s')
    print(f"\nCircuit Core Database Setup")
    print(f"{'=' * 60}")
    print(f"URL: {args.url.split('@')[-1]}")
    print(f"{'=' * 60}\n")

    engine = create_db_engine(args.url, args.echo)
    if not create_tables(engine):
        sys.exit(1)

    print("\n✓ Results database is ready to use!\n")


if __name__ == '__main__':
    main()
